/* sfqmap: technology mapping for multiphase-clocked SFQ circuits
 * Copyright (C) 2026  The sfqmap authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file balancing.hpp
  \brief Path-balancing DFF insertion with fanout sharing

  Given stages for every clocked element, inserts the fewest DFFs so that
  consecutive clocked elements along every wire are between 1 and n
  stages apart and the release elements feeding a T1 sit at pairwise
  distinct stages. DFFs on a fanout tree are shared where their
  source-side stage prefix coincides; splitters stay implicit (area
  charges them per net fanout) and never enter the DFF-count objective.
*/

#pragma once

#include "netlist.hpp"
#include "staging.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace sfqmap
{

struct balance_metrics
{
  int64_t dff_count{ 0 };
  int64_t jj_area{ 0 };
  int64_t depth_cycles{ 0 };
};

/*! \brief Netlist with DFFs materialized and stages extended over them. */
struct balanced_design
{
  netlist net;
  stage_assignment stages;
  balance_metrics metrics;
  bool optimal{ true };
};

/*! \brief DFF-insertion model: one fanout tree per driven net.
 *
 * Branch variables are DFF stage chains; separation constraints tie the
 * branches feeding one T1 together. The release element of a branch is
 * its last DFF, or the producer itself when the branch has none.
 */
struct csp_model
{
  struct sink
  {
    uint32_t consumer{ 0 };
    uint32_t fanin_index{ 0 };
    int64_t sigma_v{ 0 };
    int64_t min_dffs{ 0 };
    bool to_t1{ false };
  };
  struct tree
  {
    net_id source;
    int64_t sigma_u{ 0 };
    std::vector<sink> sinks;
  };
  struct separation
  {
    uint32_t t1{ 0 };
    int64_t sigma_t1{ 0 };
    std::array<std::pair<uint32_t, uint32_t>, 3> branch{}; // (tree, sink) per fanin
  };

  uint32_t phases{ 1 };
  std::vector<tree> trees;
  std::vector<separation> separations;
};

/*! \brief Builds the insertion model from a feasible stage assignment. */
inline csp_model build_csp( netlist const& net, stage_assignment const& stages )
{
  csp_model m;
  m.phases = stages.phases;
  std::map<net_id, uint32_t> tree_of;
  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    if ( !gate_is_clocked( g.kind ) )
    {
      continue;
    }
    if ( !stages.has_stage( id ) )
    {
      throw std::invalid_argument( "build_csp: clocked node without a stage" );
    }
    for ( uint32_t j = 0; j < g.fanins.size(); ++j )
    {
      auto const& f = g.fanins[j];
      net_id const src{ f.node, f.pin };
      int64_t const su = stages.has_stage( f.node ) ? stages.sigma[f.node] : 0;
      int64_t const sv = stages.sigma[id];
      if ( sv - su < 1 )
      {
        throw std::invalid_argument( "build_csp: stage ordering violated" );
      }
      auto it = tree_of.find( src );
      if ( it == tree_of.end() )
      {
        it = tree_of.emplace( src, static_cast<uint32_t>( m.trees.size() ) ).first;
        m.trees.push_back( csp_model::tree{ src, su, {} } );
      }
      m.trees[it->second].sinks.push_back(
          csp_model::sink{ id, j, sv, edge_dff_bound( sv - su, stages.phases ),
                           g.kind == gate_kind::t1 } );
    }
  }
  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    if ( g.kind != gate_kind::t1 )
    {
      continue;
    }
    csp_model::separation sep;
    sep.t1 = id;
    sep.sigma_t1 = stages.sigma[id];
    for ( uint32_t j = 0; j < 3; ++j )
    {
      auto const& f = g.fanins[j];
      uint32_t const t = tree_of.at( net_id{ f.node, f.pin } );
      uint32_t s = UINT32_MAX;
      for ( uint32_t i = 0; i < m.trees[t].sinks.size(); ++i )
      {
        if ( m.trees[t].sinks[i].consumer == id && m.trees[t].sinks[i].fanin_index == j )
        {
          s = i;
          break;
        }
      }
      assert( s != UINT32_MAX );
      sep.branch[j] = { t, s };
    }
    m.separations.push_back( sep );
  }
  return m;
}

/*! \brief Solver parameters; the budget is a deterministic node count. */
struct balance_params
{
  int64_t node_budget{ 2'000'000 };
  /*! \brief Extra DFFs a branch may take beyond its minimum inside T1 components. */
  int64_t slack{ 2 };
  /*! \brief Chains enumerated per branch and count before the canonical fallback. */
  size_t chain_limit{ 4096 };
};

namespace detail
{

using dff_chain = std::vector<int64_t>;

/* all stage chains of length m from su to sv with hops of at most n;
 * stops once `limit` chains were produced */
inline void enumerate_chains( int64_t su, int64_t sv, uint32_t n, int64_t m, size_t limit,
                              std::vector<dff_chain>& out )
{
  if ( m == 0 )
  {
    if ( sv - su >= 1 && sv - su <= static_cast<int64_t>( n ) && out.size() < limit )
    {
      out.push_back( {} );
    }
    return;
  }
  dff_chain cur;
  auto rec = [&]( auto&& self, int64_t prev, int64_t left ) -> bool {
    if ( out.size() >= limit )
    {
      return false;
    }
    if ( left == 0 )
    {
      if ( sv - prev >= 1 && sv - prev <= static_cast<int64_t>( n ) )
      {
        out.push_back( cur );
      }
      return true;
    }
    for ( int64_t s = prev + 1; s <= prev + static_cast<int64_t>( n ); ++s )
    {
      if ( s + left * static_cast<int64_t>( n ) < sv || s >= sv )
      {
        continue; // remaining hops cannot reach sv
      }
      cur.push_back( s );
      bool const ok = self( self, s, left - 1 );
      cur.pop_back();
      if ( !ok )
      {
        return false;
      }
    }
    return true;
  };
  rec( rec, su, m );
}

/* stride-n prefix packed below a required last stage */
inline dff_chain canonical_chain( int64_t su, int64_t release, int64_t m, uint32_t n )
{
  dff_chain c( static_cast<size_t>( m ) );
  for ( int64_t j = 1; j <= m; ++j )
  {
    c[static_cast<size_t>( j - 1 )] =
        std::min( su + j * static_cast<int64_t>( n ), release - ( m - j ) );
  }
  return c;
}

/* trie of stage prefixes per tree; size is the DFF-count objective */
class trie_counter
{
public:
  explicit trie_counter( size_t num_trees ) : prefixes_( num_trees ) {}

  int64_t add( uint32_t tree, dff_chain const& c )
  {
    int64_t fresh = 0;
    dff_chain prefix;
    for ( int64_t s : c )
    {
      prefix.push_back( s );
      if ( ++prefixes_[tree][prefix] == 1 )
      {
        ++fresh;
      }
    }
    return fresh;
  }

  void remove( uint32_t tree, dff_chain const& c )
  {
    dff_chain prefix;
    for ( int64_t s : c )
    {
      prefix.push_back( s );
      auto it = prefixes_[tree].find( prefix );
      if ( --it->second == 0 )
      {
        prefixes_[tree].erase( it );
      }
    }
  }

  int64_t marginal( uint32_t tree, dff_chain const& c ) const
  {
    int64_t fresh = 0;
    dff_chain prefix;
    for ( int64_t s : c )
    {
      prefix.push_back( s );
      if ( !prefixes_[tree].count( prefix ) )
      {
        ++fresh;
      }
    }
    return fresh;
  }

  int64_t depth( uint32_t tree ) const
  {
    int64_t d = 0;
    for ( auto const& [p, cnt] : prefixes_[tree] )
    {
      (void)cnt;
      d = std::max( d, static_cast<int64_t>( p.size() ) );
    }
    return d;
  }

private:
  std::vector<std::map<dff_chain, int>> prefixes_;
};

struct branch_ref
{
  uint32_t tree;
  uint32_t sink;
};

class balance_solver
{
public:
  balance_solver( csp_model const& m, balance_params const& ps ) : m_( m ), ps_( ps ) {}

  /*! \brief Chains per (tree, sink); returns whether minimality is proven. */
  bool solve( std::vector<std::vector<dff_chain>>& result )
  {
    result.assign( m_.trees.size(), {} );
    for ( uint32_t t = 0; t < m_.trees.size(); ++t )
    {
      result[t].resize( m_.trees[t].sinks.size() );
    }

    // union-find: trees coupled through a T1 separation form one subproblem
    std::vector<uint32_t> parent( m_.trees.size() );
    std::iota( parent.begin(), parent.end(), 0u );
    auto find = [&]( uint32_t x ) {
      while ( parent[x] != x )
      {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for ( auto const& s : m_.separations )
    {
      parent[find( s.branch[1].first )] = find( s.branch[0].first );
      parent[find( s.branch[2].first )] = find( s.branch[0].first );
    }
    std::map<uint32_t, std::vector<uint32_t>> groups;
    for ( uint32_t t = 0; t < m_.trees.size(); ++t )
    {
      groups[find( t )].push_back( t );
    }
    std::map<uint32_t, std::vector<uint32_t>> seps_of;
    for ( uint32_t i = 0; i < m_.separations.size(); ++i )
    {
      seps_of[find( m_.separations[i].branch[0].first )].push_back( i );
    }

    bool proven = true;
    for ( auto const& [root, trees] : groups )
    {
      auto const it = seps_of.find( root );
      if ( it == seps_of.end() )
      {
        for ( uint32_t t : trees )
        {
          solve_plain_tree( t, result[t] );
        }
      }
      else
      {
        proven &= solve_component( trees, it->second, result );
      }
    }
    return proven;
  }

private:
  /* uncoupled tree: one shared stride-n chain is optimal, the trie can
   * never be smaller than the longest branch */
  void solve_plain_tree( uint32_t t, std::vector<dff_chain>& chains ) const
  {
    auto const& tree = m_.trees[t];
    for ( uint32_t s = 0; s < tree.sinks.size(); ++s )
    {
      chains[s].clear();
      for ( int64_t j = 1; j <= tree.sinks[s].min_dffs; ++j )
      {
        chains[s].push_back( tree.sigma_u + j * static_cast<int64_t>( m_.phases ) );
      }
    }
  }

  std::vector<dff_chain> branch_domain( uint32_t t, uint32_t s, bool& truncated ) const
  {
    auto const& tree = m_.trees[t];
    auto const& sink = tree.sinks[s];
    std::vector<dff_chain> dom;
    for ( int64_t m = sink.min_dffs; m <= sink.min_dffs + ps_.slack; ++m )
    {
      size_t const before = dom.size();
      enumerate_chains( tree.sigma_u, sink.sigma_v, m_.phases, m, before + ps_.chain_limit + 1,
                        dom );
      if ( dom.size() > before + ps_.chain_limit )
      {
        // canonical fallback: stride prefix, release anywhere in the window
        dom.resize( before );
        truncated = true;
        int64_t const lo =
            std::max( sink.sigma_v - static_cast<int64_t>( m_.phases ), tree.sigma_u + m );
        for ( int64_t r = lo; r <= sink.sigma_v - 1; ++r )
        {
          if ( r - tree.sigma_u > m * static_cast<int64_t>( m_.phases ) )
          {
            continue;
          }
          dom.push_back( canonical_chain( tree.sigma_u, r, m, m_.phases ) );
        }
      }
    }
    std::sort( dom.begin(), dom.end(), []( dff_chain const& a, dff_chain const& b ) {
      return std::tuple( a.size(), a ) < std::tuple( b.size(), b );
    } );
    dom.erase( std::unique( dom.begin(), dom.end() ), dom.end() );
    return dom;
  }

  int64_t release_of( branch_ref const& b, dff_chain const& c ) const
  {
    return c.empty() ? m_.trees[b.tree].sigma_u : c.back();
  }

  bool solve_component( std::vector<uint32_t> const& trees, std::vector<uint32_t> const& seps,
                        std::vector<std::vector<dff_chain>>& result )
  {
    branches_.clear();
    for ( int pass = 0; pass < 2; ++pass ) // T1-feeding branches first
    {
      for ( uint32_t t : trees )
      {
        for ( uint32_t s = 0; s < m_.trees[t].sinks.size(); ++s )
        {
          if ( m_.trees[t].sinks[s].to_t1 == ( pass == 0 ) )
          {
            branches_.push_back( branch_ref{ t, s } );
          }
        }
      }
    }

    bool truncated = false;
    domains_.clear();
    for ( auto const& b : branches_ )
    {
      domains_.push_back( branch_domain( b.tree, b.sink, truncated ) );
      if ( domains_.back().empty() )
      {
        throw std::logic_error( "balancing: empty branch domain" );
      }
    }

    // separations as (branch position, fanin slot) triples
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> pos_of;
    for ( uint32_t i = 0; i < branches_.size(); ++i )
    {
      pos_of[{ branches_[i].tree, branches_[i].sink }] = i;
    }
    seps_.clear();
    seps_by_pos_.assign( branches_.size(), {} );
    for ( uint32_t si : seps )
    {
      std::array<uint32_t, 3> pos{};
      for ( int j = 0; j < 3; ++j )
      {
        pos[j] = pos_of.at( m_.separations[si].branch[j] );
      }
      for ( int j = 0; j < 3; ++j )
      {
        seps_by_pos_[pos[j]].push_back( static_cast<uint32_t>( seps_.size() ) );
      }
      seps_.push_back( pos );
    }

    // greedy incumbent: first separation-feasible value per branch
    release_.assign( branches_.size(), INT64_MIN );
    best_.assign( branches_.size(), {} );
    {
      trie_counter trie( m_.trees.size() );
      int64_t cost = 0;
      for ( uint32_t i = 0; i < branches_.size(); ++i )
      {
        bool placed = false;
        for ( auto const& c : domains_[i] )
        {
          release_[i] = release_of( branches_[i], c );
          if ( separations_ok( i ) )
          {
            best_[i] = c;
            cost += trie.add( branches_[i].tree, c );
            placed = true;
            break;
          }
        }
        if ( !placed )
        {
          throw std::logic_error( "balancing: separation constraints unsatisfiable" );
        }
      }
      best_cost_ = cost;
    }

    // exact backtracking seeded with the incumbent
    release_.assign( branches_.size(), INT64_MIN );
    chosen_.assign( branches_.size(), {} );
    trie_ = trie_counter( m_.trees.size() );
    nodes_used_ = 0;
    dfs( 0, 0 );
    bool const proven = nodes_used_ < ps_.node_budget && !truncated;

    for ( uint32_t i = 0; i < branches_.size(); ++i )
    {
      result[branches_[i].tree][branches_[i].sink] = best_[i];
    }
    return proven;
  }

  /* pairwise-distinct releases over every separation touching position i,
   * considering only already-assigned positions */
  bool separations_ok( uint32_t i ) const
  {
    for ( uint32_t s : seps_by_pos_[i] )
    {
      for ( uint32_t a : seps_[s] )
      {
        if ( a == i || release_[a] == INT64_MIN )
        {
          continue;
        }
        if ( release_[a] == release_[i] )
        {
          return false;
        }
      }
    }
    return true;
  }

  /* admissible completion bound: every tree still needs a trie at least as
   * deep as its longest unassigned branch */
  int64_t completion_bound( uint32_t from ) const
  {
    std::map<uint32_t, int64_t> need;
    for ( uint32_t i = from; i < branches_.size(); ++i )
    {
      auto& n = need[branches_[i].tree];
      n = std::max( n, m_.trees[branches_[i].tree].sinks[branches_[i].sink].min_dffs );
    }
    int64_t extra = 0;
    for ( auto const& [t, n] : need )
    {
      extra += std::max<int64_t>( 0, n - trie_.depth( t ) );
    }
    return extra;
  }

  void dfs( uint32_t i, int64_t cost )
  {
    if ( nodes_used_ >= ps_.node_budget )
    {
      return;
    }
    if ( i == branches_.size() )
    {
      if ( cost < best_cost_ )
      {
        best_cost_ = cost;
        best_ = chosen_;
      }
      return;
    }
    if ( cost + completion_bound( i ) >= best_cost_ )
    {
      return;
    }
    // deterministic value order: smallest marginal cost first
    auto const& dom = domains_[i];
    std::vector<uint32_t> order( dom.size() );
    std::iota( order.begin(), order.end(), 0u );
    std::vector<int64_t> marg( dom.size() );
    for ( uint32_t v = 0; v < dom.size(); ++v )
    {
      marg[v] = trie_.marginal( branches_[i].tree, dom[v] );
    }
    std::stable_sort( order.begin(), order.end(),
                      [&]( uint32_t a, uint32_t b ) { return marg[a] < marg[b]; } );
    for ( uint32_t v : order )
    {
      ++nodes_used_;
      if ( nodes_used_ >= ps_.node_budget )
      {
        return;
      }
      if ( cost + marg[v] >= best_cost_ )
      {
        continue;
      }
      release_[i] = release_of( branches_[i], dom[v] );
      if ( !separations_ok( i ) )
      {
        release_[i] = INT64_MIN;
        continue;
      }
      chosen_[i] = dom[v];
      int64_t const fresh = trie_.add( branches_[i].tree, dom[v] );
      dfs( i + 1, cost + fresh );
      trie_.remove( branches_[i].tree, dom[v] );
      release_[i] = INT64_MIN;
    }
  }

  csp_model const& m_;
  balance_params ps_;
  std::vector<branch_ref> branches_;
  std::vector<std::vector<dff_chain>> domains_;
  std::vector<std::array<uint32_t, 3>> seps_;
  std::vector<std::vector<uint32_t>> seps_by_pos_;
  std::vector<int64_t> release_;
  std::vector<dff_chain> chosen_;
  std::vector<dff_chain> best_;
  int64_t best_cost_{ 0 };
  int64_t nodes_used_{ 0 };
  trie_counter trie_{ 0 };
};

/* materializes chains as DFF nodes, shared along equal prefixes */
inline balanced_design materialize( netlist const& src, stage_assignment const& stages,
                                    csp_model const& m,
                                    std::vector<std::vector<dff_chain>> const& chains,
                                    cost_table const& costs, bool shared )
{
  balanced_design out;
  out.net = src;
  out.stages = stages;
  out.stages.sigma.resize( src.size(), -1 );

  int64_t dffs = 0;
  for ( uint32_t t = 0; t < m.trees.size(); ++t )
  {
    auto const& tree = m.trees[t];
    std::map<dff_chain, uint32_t> node_of; // shared prefix -> DFF node
    for ( uint32_t s = 0; s < tree.sinks.size(); ++s )
    {
      auto const& c = chains[t][s];
      signal feed( tree.source.node, false, tree.source.pin );
      dff_chain prefix;
      for ( int64_t stage : c )
      {
        prefix.push_back( stage );
        uint32_t dff = 0;
        auto const it = shared ? node_of.find( prefix ) : node_of.end();
        if ( it != node_of.end() )
        {
          dff = it->second;
        }
        else
        {
          dff = out.net.add_gate( gate_kind::dff, { feed } );
          out.stages.sigma.push_back( stage );
          ++dffs;
          if ( shared )
          {
            node_of.emplace( prefix, dff );
          }
        }
        feed = signal( dff, false, t1_output::sum );
      }
      if ( !c.empty() )
      {
        auto const& sink = tree.sinks[s];
        signal const old = out.net.node_at( sink.consumer ).fanins[sink.fanin_index];
        out.net.set_fanin( sink.consumer, sink.fanin_index,
                           signal( feed.node, old.complemented, feed.pin ) );
      }
    }
  }

  out.metrics.dff_count = dffs;
  out.metrics.jj_area = out.net.area( costs );
  int64_t sigma_max = 0;
  for ( uint32_t id = 0; id < out.net.size(); ++id )
  {
    if ( !out.net.is_dead( id ) && out.stages.has_stage( id ) )
    {
      sigma_max = std::max( sigma_max, out.stages.sigma[id] );
    }
  }
  out.metrics.depth_cycles =
      ( sigma_max + static_cast<int64_t>( m.phases ) - 1 ) / static_cast<int64_t>( m.phases );
  return out;
}

} // namespace detail

/*! \brief Minimal DFF insertion; falls back to the best incumbent (flagged
 * non-optimal) when the budget runs out or a branch domain was truncated.
 */
inline balanced_design solve_balancing( netlist const& net, stage_assignment const& stages,
                                        csp_model const& model, cost_table const& costs,
                                        balance_params const& ps = {} )
{
  detail::balance_solver solver( model, ps );
  std::vector<std::vector<detail::dff_chain>> chains;
  bool const proven = solver.solve( chains );
  auto design = detail::materialize( net, stages, model, chains, costs, /*shared=*/true );
  design.optimal = proven;
  return design;
}

/*! \brief Upper-bound reference: per-edge ALAP chains without sharing.
 *
 * Pre-T1 conflicts are fixed by re-picking the three release stages (adding
 * DFFs where a branch cannot reach a free slot); always feasible.
 */
inline balanced_design greedy_baseline( netlist const& net, stage_assignment const& stages,
                                        cost_table const& costs )
{
  csp_model const m = build_csp( net, stages );
  int64_t const n = m.phases;
  std::vector<std::vector<detail::dff_chain>> chains( m.trees.size() );
  for ( uint32_t t = 0; t < m.trees.size(); ++t )
  {
    auto const& tree = m.trees[t];
    chains[t].resize( tree.sinks.size() );
    for ( uint32_t s = 0; s < tree.sinks.size(); ++s )
    {
      int64_t const md = tree.sinks[s].min_dffs;
      for ( int64_t j = 1; j <= md; ++j )
      {
        chains[t][s].push_back( tree.sinks[s].sigma_v - ( md + 1 - j ) * n );
      }
    }
  }
  for ( auto const& sep : m.separations )
  {
    // feasible (release, extra-DFF) options per fanin branch
    std::array<std::vector<std::pair<int64_t, int64_t>>, 3> options; // (extra, release)
    for ( int j = 0; j < 3; ++j )
    {
      auto const [t, s] = sep.branch[j];
      auto const& tree = m.trees[t];
      int64_t const m0 = tree.sinks[s].min_dffs;
      for ( int64_t extra = 0; extra <= 2; ++extra )
      {
        int64_t const cnt = m0 + extra;
        if ( cnt == 0 )
        {
          options[j].emplace_back( 0, tree.sigma_u );
          continue;
        }
        int64_t const lo = std::max( sep.sigma_t1 - n, tree.sigma_u + cnt );
        int64_t const hi = std::min( sep.sigma_t1 - 1, tree.sigma_u + cnt * n );
        for ( int64_t r = hi; r >= lo; --r )
        {
          options[j].emplace_back( extra, r );
        }
      }
    }
    bool done = false;
    for ( auto const& [ea, ra] : options[0] )
    {
      for ( auto const& [eb, rb] : options[1] )
      {
        if ( rb == ra )
        {
          continue;
        }
        for ( auto const& [ec, rc] : options[2] )
        {
          if ( rc == ra || rc == rb )
          {
            continue;
          }
          std::array<int64_t, 3> const extra{ ea, eb, ec };
          std::array<int64_t, 3> const rel{ ra, rb, rc };
          for ( int j = 0; j < 3; ++j )
          {
            auto const [t, s] = sep.branch[j];
            int64_t const cnt = m.trees[t].sinks[s].min_dffs + extra[j];
            chains[t][s] =
                cnt == 0 ? detail::dff_chain{}
                         : detail::canonical_chain( m.trees[t].sigma_u, rel[j], cnt,
                                                    static_cast<uint32_t>( n ) );
          }
          done = true;
          break;
        }
        if ( done )
        {
          break;
        }
      }
      if ( done )
      {
        break;
      }
    }
    if ( !done )
    {
      throw std::logic_error( "greedy_baseline: cannot separate T1 fanins" );
    }
  }
  auto design = detail::materialize( net, stages, m, chains, costs, /*shared=*/false );
  design.optimal = false;
  return design;
}

} // namespace sfqmap
