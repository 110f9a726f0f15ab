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
  \file staging.hpp
  \brief Clock-stage assignment by integer linear programming

  Every clocked element g receives a stage sigma(g) = n*S(g) + phi(g).
  The model minimizes the estimated number of path-balancing DFFs: one
  k_e variable per data edge counts floor((d-1)/n) mandatory DFFs, and
  each T1 cell adds the input-separation cost of Eq. (4). The embedded
  solver is a deterministic branch-and-bound over the structured view;
  the literal linearized model is kept alongside for LP-format export to
  an external solver.
*/

#pragma once

#include "netlist.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace sfqmap
{

/*! \brief Stage from (phase count, epoch, phase): sigma = n*S + phi. */
inline int64_t stage_of( uint32_t n, int64_t epoch, int64_t phase )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "stage_of: phase count must be positive" );
  }
  if ( phase < 0 || phase >= static_cast<int64_t>( n ) )
  {
    throw std::invalid_argument( "stage_of: phase out of range" );
  }
  return static_cast<int64_t>( n ) * epoch + phase;
}

/*! \brief Minimum DFFs on a wire with stage distance d so that
 * consecutive clocked elements are at most n stages apart.
 */
inline int64_t edge_dff_bound( int64_t d, uint32_t n )
{
  if ( d < 1 )
  {
    throw std::invalid_argument( "edge_dff_bound: ordering violation (d < 1)" );
  }
  return ( d - 1 ) / static_cast<int64_t>( n );
}

/*! \brief Eq. (4): DFFs a T1 needs to separate same-phase in-window inputs.
 *
 * `sigmas` are the three fanin stages sorted ascending; requires the
 * Eq. (3) constraint to hold.
 */
inline int t1_separation_cost( std::array<int64_t, 3> const& sigmas, int64_t sigma_t1, uint32_t n )
{
  if ( !( sigmas[0] <= sigmas[1] && sigmas[1] <= sigmas[2] ) )
  {
    throw std::invalid_argument( "t1_separation_cost: stages not sorted" );
  }
  if ( sigma_t1 < std::max( { sigmas[0] + 3, sigmas[1] + 2, sigmas[2] + 1 } ) )
  {
    throw std::invalid_argument( "t1_separation_cost: Eq. (3) violated" );
  }
  auto const phi = [&]( int64_t s ) { return s % static_cast<int64_t>( n ); };
  int cost = 0;
  if ( phi( sigmas[0] ) == phi( sigmas[1] ) && sigma_t1 - sigmas[0] <= static_cast<int64_t>( n ) )
  {
    ++cost;
  }
  if ( phi( sigmas[1] ) == phi( sigmas[2] ) && sigma_t1 - sigmas[1] <= static_cast<int64_t>( n ) )
  {
    ++cost;
  }
  return cost;
}

/*! \brief Stage map over the clocked elements of one netlist. */
struct stage_assignment
{
  uint32_t phases{ 1 };
  std::vector<int64_t> sigma; // by node id; -1 where no stage applies
  int64_t objective{ 0 };
  bool optimal{ false };
  // phase/epoch as stored in a design file (normally derived); -1 = absent
  std::vector<int64_t> stored_phi;
  std::vector<int64_t> stored_epoch;

  bool has_stage( uint32_t id ) const
  {
    return id < sigma.size() && sigma[id] >= 0;
  }
  int64_t phi( uint32_t id ) const { return sigma.at( id ) % phases; }
  int64_t epoch( uint32_t id ) const { return sigma.at( id ) / phases; }
};

/*! \brief Stage-assignment ILP: structured view plus literal linearization. */
struct ilp_model
{
  struct edge
  {
    uint32_t producer; // PI or clocked node
    uint32_t consumer; // clocked node
  };

  uint32_t phases{ 1 };
  int64_t sigma_upper{ 0 };
  std::vector<uint32_t> clocked;  // topological order
  std::vector<edge> edges;
  std::vector<uint32_t> t1_cells;
  std::vector<int64_t> lower;                          // per node id; 0 for PIs
  std::vector<std::vector<uint32_t>> producers_of;     // per node id (clocked): data-fanin producers

  // literal integer program
  struct lin_var
  {
    std::string name;
    int64_t lb{ 0 };
    int64_t ub{ 0 };
    bool binary{ false };
  };
  struct lin_term
  {
    uint32_t var;
    int64_t coef;
  };
  struct lin_row
  {
    std::string name;
    std::vector<lin_term> terms;
    int64_t lb{ std::numeric_limits<int64_t>::min() };
    int64_t ub{ std::numeric_limits<int64_t>::max() };
  };
  std::vector<lin_var> vars;
  std::vector<lin_row> rows;
  std::vector<lin_term> objective_terms;
  std::vector<int64_t> sigma_var; // node id -> var index, -1 if none

  /*! \brief Objective of a complete stage map, evaluated structurally. */
  int64_t evaluate( stage_assignment const& a ) const
  {
    auto const s = [&]( uint32_t id ) {
      return a.sigma[id] < 0 ? int64_t{ 0 } : a.sigma[id];
    };
    int64_t obj = 0;
    for ( auto const& e : edges )
    {
      obj += edge_dff_bound( s( e.consumer ) - s( e.producer ), phases );
    }
    for ( uint32_t t : t1_cells )
    {
      std::array<int64_t, 3> in{ s( producers_of[t][0] ), s( producers_of[t][1] ),
                                 s( producers_of[t][2] ) };
      std::sort( in.begin(), in.end() );
      obj += t1_separation_cost( in, s( t ), phases );
    }
    return obj;
  }

  /*! \brief Checks a stage map against every structural constraint. */
  bool feasible( stage_assignment const& a ) const
  {
    auto const s = [&]( uint32_t id ) {
      return a.sigma[id] < 0 ? int64_t{ 0 } : a.sigma[id];
    };
    for ( uint32_t g : clocked )
    {
      if ( !a.has_stage( g ) || a.sigma[g] > sigma_upper )
      {
        return false;
      }
    }
    for ( auto const& e : edges )
    {
      if ( s( e.consumer ) - s( e.producer ) < 1 )
      {
        return false;
      }
    }
    for ( uint32_t t : t1_cells )
    {
      std::array<int64_t, 3> in{ s( producers_of[t][0] ), s( producers_of[t][1] ),
                                 s( producers_of[t][2] ) };
      std::sort( in.begin(), in.end() );
      if ( s( t ) < std::max( { in[0] + 3, in[1] + 2, in[2] + 1 } ) )
      {
        return false;
      }
    }
    return true;
  }
};

namespace detail
{

/* producer of a data edge, looking through passive splitters */
inline uint32_t resolve_producer( netlist const& net, uint32_t node )
{
  while ( net.kind_of( node ) == gate_kind::splitter )
  {
    node = net.node_at( node ).fanins[0].node;
  }
  return node;
}

/* Eq. (3) right-hand side for three producer stages */
inline int64_t t1_stage_bound( std::array<int64_t, 3> in )
{
  std::sort( in.begin(), in.end() );
  return std::max( { in[0] + 3, in[1] + 2, in[2] + 1 } );
}

} // namespace detail

/*! \brief Builds the stage-assignment ILP for a mapped netlist.
 *
 * PIs are pinned at stage 0, POs stay unconstrained. T1 cells require at
 * least three phases; with fewer the separation window cannot hold three
 * distinct release stages.
 */
inline ilp_model build_ilp( netlist const& net, uint32_t n )
{
  if ( n < 1 )
  {
    throw std::invalid_argument( "build_ilp: phase count must be positive" );
  }
  ilp_model m;
  m.phases = n;
  m.lower.assign( net.size(), 0 );
  m.producers_of.assign( net.size(), {} );
  m.sigma_var.assign( net.size(), -1 );

  size_t t1_count = 0;
  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    if ( g.kind == gate_kind::t1 )
    {
      ++t1_count;
    }
    if ( !gate_is_clocked( g.kind ) )
    {
      continue;
    }
    m.clocked.push_back( id );
    for ( auto const& f : g.fanins )
    {
      uint32_t const p = detail::resolve_producer( net, f.node );
      m.producers_of[id].push_back( p );
      m.edges.push_back( ilp_model::edge{ p, id } );
    }
    if ( g.kind == gate_kind::t1 )
    {
      if ( n < 3 )
      {
        throw std::invalid_argument( "build_ilp: T1 cells require at least 3 phases" );
      }
      m.t1_cells.push_back( id );
      m.lower[id] = detail::t1_stage_bound( { m.lower[m.producers_of[id][0]],
                                              m.lower[m.producers_of[id][1]],
                                              m.lower[m.producers_of[id][2]] } );
    }
    else
    {
      int64_t lb = 0;
      for ( uint32_t p : m.producers_of[id] )
      {
        lb = std::max( lb, m.lower[p] );
      }
      m.lower[id] = lb + 1;
    }
  }

  m.sigma_upper = static_cast<int64_t>( n ) *
                  ( static_cast<int64_t>( net.logic_depth() ) + 3 * static_cast<int64_t>( t1_count ) + 1 );
  int64_t const big_m = m.sigma_upper + n + 4;

  auto var = [&]( std::string name, int64_t lb, int64_t ub, bool binary = false ) {
    m.vars.push_back( ilp_model::lin_var{ std::move( name ), lb, ub, binary } );
    return static_cast<uint32_t>( m.vars.size() - 1 );
  };
  auto row = [&]( std::string name, std::vector<ilp_model::lin_term> terms, int64_t lb, int64_t ub ) {
    m.rows.push_back( ilp_model::lin_row{ std::move( name ), std::move( terms ), lb, ub } );
  };
  constexpr int64_t none_lo = std::numeric_limits<int64_t>::min();
  constexpr int64_t none_hi = std::numeric_limits<int64_t>::max();

  for ( uint32_t g : m.clocked )
  {
    m.sigma_var[g] = var( "s_" + std::to_string( g ), m.lower[g], m.sigma_upper );
  }
  // sigma var of a PI producer folds away as the constant 0
  auto sig_term = [&]( uint32_t node, int64_t coef,
                       std::vector<ilp_model::lin_term>& terms ) -> int64_t {
    if ( m.sigma_var[node] >= 0 )
    {
      terms.push_back( { static_cast<uint32_t>( m.sigma_var[node] ), coef } );
      return 0;
    }
    return 0; // PI contributes coef * 0
  };

  for ( size_t i = 0; i < m.edges.size(); ++i )
  {
    auto const& e = m.edges[i];
    uint32_t const k = var( "k_" + std::to_string( i ), 0, m.sigma_upper / n + 1 );
    m.objective_terms.push_back( { k, 1 } );
    {
      std::vector<ilp_model::lin_term> t;
      sig_term( e.consumer, 1, t );
      sig_term( e.producer, -1, t );
      row( "ord_" + std::to_string( i ), std::move( t ), 1, none_hi );
    }
    {
      std::vector<ilp_model::lin_term> t{ { k, static_cast<int64_t>( n ) } };
      sig_term( e.consumer, -1, t );
      sig_term( e.producer, 1, t );
      row( "dff_" + std::to_string( i ), std::move( t ), -static_cast<int64_t>( n ), none_hi );
    }
  }

  for ( uint32_t t1 : m.t1_cells )
  {
    std::string const tag = std::to_string( t1 );
    auto const& prod = m.producers_of[t1];
    // permutation binaries x[f][r]: fanin f takes sorted rank r
    std::array<std::array<uint32_t, 3>, 3> x{};
    for ( int f = 0; f < 3; ++f )
    {
      for ( int r = 0; r < 3; ++r )
      {
        x[f][r] = var( "x_" + tag + "_" + std::to_string( f ) + "_" + std::to_string( r ), 0, 1, true );
      }
    }
    for ( int f = 0; f < 3; ++f )
    {
      std::vector<ilp_model::lin_term> t{ { x[f][0], 1 }, { x[f][1], 1 }, { x[f][2], 1 } };
      row( "perm_f_" + tag + "_" + std::to_string( f ), std::move( t ), 1, 1 );
    }
    for ( int r = 0; r < 3; ++r )
    {
      std::vector<ilp_model::lin_term> t{ { x[0][r], 1 }, { x[1][r], 1 }, { x[2][r], 1 } };
      row( "perm_r_" + tag + "_" + std::to_string( r ), std::move( t ), 1, 1 );
    }
    // rank stage variables, tied to the selected fanin by big-M
    std::array<uint32_t, 3> rk{};
    for ( int r = 0; r < 3; ++r )
    {
      rk[r] = var( "rk_" + tag + "_" + std::to_string( r ), 0, m.sigma_upper );
      for ( int f = 0; f < 3; ++f )
      {
        {
          std::vector<ilp_model::lin_term> t{ { rk[r], 1 }, { x[f][r], -big_m } };
          sig_term( prod[f], -1, t );
          row( "rkl_" + tag + "_" + std::to_string( r ) + std::to_string( f ), std::move( t ),
               -big_m, none_hi );
        }
        {
          std::vector<ilp_model::lin_term> t{ { rk[r], 1 }, { x[f][r], big_m } };
          sig_term( prod[f], -1, t );
          row( "rku_" + tag + "_" + std::to_string( r ) + std::to_string( f ), std::move( t ),
               none_lo, big_m );
        }
      }
    }
    row( "sort12_" + tag, { { rk[1], 1 }, { rk[0], -1 } }, 0, none_hi );
    row( "sort23_" + tag, { { rk[2], 1 }, { rk[1], -1 } }, 0, none_hi );
    // Eq. (3)
    for ( int r = 0; r < 3; ++r )
    {
      std::vector<ilp_model::lin_term> t{ { rk[r], -1 } };
      sig_term( t1, 1, t );
      row( "eq3_" + tag + "_" + std::to_string( r ), std::move( t ), 3 - r, none_hi );
    }
    // phase decomposition rk = n*q + p
    std::array<uint32_t, 3> ph{};
    for ( int r = 0; r < 3; ++r )
    {
      uint32_t const q = var( "q_" + tag + "_" + std::to_string( r ), 0, m.sigma_upper / n + 1 );
      ph[r] = var( "p_" + tag + "_" + std::to_string( r ), 0, n - 1 );
      row( "phase_" + tag + "_" + std::to_string( r ),
           { { rk[r], 1 }, { q, -static_cast<int64_t>( n ) }, { ph[r], -1 } }, 0, 0 );
    }
    // cost term per adjacent sorted pair: forced to 1 unless an escape
    // binary certifies unequal phases or an out-of-window gap
    for ( int pair = 0; pair < 2; ++pair )
    {
      std::string const ptag = tag + "_" + std::to_string( pair );
      uint32_t const lo_r = ph[pair], hi_r = ph[pair + 1];
      uint32_t const da = var( "da_" + ptag, 0, 1, true );
      uint32_t const db = var( "db_" + ptag, 0, 1, true );
      uint32_t const w = var( "w_" + ptag, 0, 1, true );
      uint32_t const c = var( "c_" + ptag, 0, 1, true );
      int64_t const mp = n; // phases differ by less than n
      row( "nea_" + ptag, { { lo_r, 1 }, { hi_r, -1 }, { da, -mp } }, 1 - mp, none_hi );
      row( "neb_" + ptag, { { hi_r, 1 }, { lo_r, -1 }, { db, -mp } }, 1 - mp, none_hi );
      {
        std::vector<ilp_model::lin_term> t{ { rk[pair], -1 }, { w, -big_m } };
        sig_term( t1, 1, t );
        row( "win_" + ptag, std::move( t ), static_cast<int64_t>( n ) + 1 - big_m, none_hi );
      }
      row( "cost_" + ptag, { { c, 1 }, { da, 1 }, { db, 1 }, { w, 1 } }, 1, none_hi );
      m.objective_terms.push_back( { c, 1 } );
    }
  }
  return m;
}

/*! \brief Solver parameters; the budget is a deterministic node count. */
struct solve_stage_params
{
  /*! \brief Branch-and-bound expansions before falling back to the incumbent. */
  int64_t node_budget{ 2'000'000 };
  /*! \brief Rounds of coordinate-descent polish on the initial solution. */
  int sweeps{ 24 };
};

namespace detail
{

class stage_search
{
public:
  stage_search( ilp_model const& m, solve_stage_params const& ps ) : m_( m ), ps_( ps )
  {
    consumers_.assign( m_.lower.size(), {} );
    in_edges_.assign( m_.lower.size(), {} );
    for ( size_t i = 0; i < m_.edges.size(); ++i )
    {
      consumers_[m_.edges[i].producer].push_back( static_cast<uint32_t>( i ) );
      in_edges_[m_.edges[i].consumer].push_back( static_cast<uint32_t>( i ) );
    }
    is_t1_.assign( m_.lower.size(), false );
    for ( uint32_t t : m_.t1_cells )
    {
      is_t1_[t] = true;
    }
  }

  stage_assignment run()
  {
    stage_assignment best = initial();
    int64_t best_obj = m_.evaluate( best );
    bool proven = m_.clocked.empty();
    if ( !m_.clocked.empty() )
    {
      nodes_used_ = 0;
      reset_state();
      dfs_best_ = best;
      dfs_best_obj_ = best_obj;
      dfs_rec( 0 );
      best = dfs_best_;
      best_obj = dfs_best_obj_;
      proven = nodes_used_ < ps_.node_budget;
      if ( proven )
      {
        // second pass: lexicographically smallest stage vector among the
        // optima; exhausting the budget here keeps the proven optimum
        reset_state();
        stage_assignment lex = best;
        if ( dfs_lex( 0, best_obj, lex ) )
        {
          best = lex;
        }
      }
    }
    best.objective = best_obj;
    best.optimal = proven;
    best.phases = m_.phases;
    return best;
  }

private:
  static constexpr int64_t infeasible_cost = std::numeric_limits<int64_t>::max() / 4;

  stage_assignment initial() const
  {
    stage_assignment a;
    a.phases = m_.phases;
    a.sigma.assign( m_.lower.size(), -1 );
    for ( uint32_t g : m_.clocked )
    {
      a.sigma[g] = m_.lower[g]; // ASAP start; lower bounds already obey Eq. (3)
    }
    refine( a );
    return a;
  }

  int64_t stage_or_zero( stage_assignment const& a, uint32_t id ) const
  {
    return a.sigma[id] < 0 ? 0 : a.sigma[id];
  }

  /* objective terms touching node g when it moves to stage s */
  int64_t local_cost( stage_assignment const& a, uint32_t g, int64_t s ) const
  {
    int64_t cost = 0;
    for ( uint32_t ei : in_edges_[g] )
    {
      int64_t const d = s - stage_or_zero( a, m_.edges[ei].producer );
      if ( d < 1 )
      {
        return infeasible_cost;
      }
      cost += edge_dff_bound( d, m_.phases );
    }
    for ( uint32_t ei : consumers_[g] )
    {
      int64_t const d = stage_or_zero( a, m_.edges[ei].consumer ) - s;
      if ( d < 1 )
      {
        return infeasible_cost;
      }
      cost += edge_dff_bound( d, m_.phases );
    }
    auto t1_cost = [&]( uint32_t t, uint32_t moved, int64_t stage ) -> int64_t {
      std::array<int64_t, 3> in{};
      for ( int j = 0; j < 3; ++j )
      {
        uint32_t const p = m_.producers_of[t][j];
        in[j] = p == moved ? stage : stage_or_zero( a, p );
      }
      std::sort( in.begin(), in.end() );
      int64_t const st = t == moved ? stage : stage_or_zero( a, t );
      if ( st < std::max( { in[0] + 3, in[1] + 2, in[2] + 1 } ) )
      {
        return infeasible_cost;
      }
      return t1_separation_cost( in, st, m_.phases );
    };
    if ( is_t1_[g] )
    {
      int64_t const c = t1_cost( g, g, s );
      if ( c >= infeasible_cost )
      {
        return infeasible_cost;
      }
      cost += c;
    }
    std::vector<uint32_t> seen;
    for ( uint32_t ei : consumers_[g] )
    {
      uint32_t const c = m_.edges[ei].consumer;
      if ( is_t1_[c] && std::find( seen.begin(), seen.end(), c ) == seen.end() )
      {
        seen.push_back( c );
        int64_t const tc = t1_cost( c, g, s );
        if ( tc >= infeasible_cost )
        {
          return infeasible_cost;
        }
        cost += tc;
      }
    }
    return cost;
  }

  void refine( stage_assignment& a ) const
  {
    for ( int sweep = 0; sweep < ps_.sweeps; ++sweep )
    {
      bool changed = false;
      for ( uint32_t g : m_.clocked )
      {
        int64_t const cur = a.sigma[g];
        int64_t best_s = cur;
        int64_t best_c = local_cost( a, g, cur );
        for ( int64_t s = m_.lower[g]; s <= m_.sigma_upper; ++s )
        {
          if ( s == cur )
          {
            continue;
          }
          int64_t const c = local_cost( a, g, s );
          if ( c < best_c || ( c == best_c && s < best_s ) )
          {
            best_c = c;
            best_s = s;
          }
          if ( c >= infeasible_cost && s > cur )
          {
            break; // past every consumer: stays infeasible
          }
        }
        if ( best_s != cur )
        {
          a.sigma[g] = best_s;
          changed = true;
        }
      }
      if ( !changed )
      {
        break;
      }
    }
  }

  void reset_state()
  {
    sigma_.assign( m_.lower.size(), -1 );
    dyn_lb_ = m_.lower;
    frozen_.assign( m_.edges.size(), 0 );
    future_ = 0;
    partial_ = 0;
    // edges leaving PIs start frozen against the static lower bounds;
    // edges leaving gates freeze when their producer is placed
    for ( size_t i = 0; i < m_.edges.size(); ++i )
    {
      auto const& e = m_.edges[i];
      if ( in_edges_[e.producer].empty() )
      {
        int64_t const d = std::max<int64_t>( 1, dyn_lb_[e.consumer] );
        frozen_[i] = edge_dff_bound( d, m_.phases );
        future_ += frozen_[i];
      }
    }
  }

  /* exact stage lower bound once all producers are assigned */
  int64_t exact_lb( uint32_t g ) const
  {
    if ( is_t1_[g] )
    {
      std::array<int64_t, 3> in{};
      for ( int j = 0; j < 3; ++j )
      {
        int64_t const v = sigma_[m_.producers_of[g][j]];
        in[j] = v < 0 ? 0 : v;
      }
      return std::max( t1_stage_bound( in ), dyn_lb_[g] );
    }
    int64_t lb = dyn_lb_[g];
    for ( uint32_t ei : in_edges_[g] )
    {
      int64_t const p = sigma_[m_.edges[ei].producer];
      lb = std::max( lb, ( p < 0 ? 0 : p ) + 1 );
    }
    return lb;
  }

  int64_t in_edge_cost( uint32_t g, int64_t s ) const
  {
    int64_t cost = 0;
    for ( uint32_t ei : in_edges_[g] )
    {
      int64_t const p = sigma_[m_.edges[ei].producer];
      cost += edge_dff_bound( s - ( p < 0 ? 0 : p ), m_.phases );
    }
    return cost;
  }

  int64_t own_cost( uint32_t g, int64_t s ) const
  {
    int64_t cost = in_edge_cost( g, s );
    if ( is_t1_[g] )
    {
      std::array<int64_t, 3> in{};
      for ( int j = 0; j < 3; ++j )
      {
        int64_t const v = sigma_[m_.producers_of[g][j]];
        in[j] = v < 0 ? 0 : v;
      }
      std::sort( in.begin(), in.end() );
      cost += t1_separation_cost( in, s, m_.phases );
    }
    return cost;
  }

  struct frame
  {
    int64_t in_future_removed{ 0 };
    std::vector<std::pair<uint32_t, int64_t>> lb_undo;
    std::vector<std::pair<uint32_t, int64_t>> frozen_undo; // edge index, previous value
  };

  /* drops the frozen estimates of g's incoming edges (now priced exactly) */
  void open_node( uint32_t g, frame& fr )
  {
    for ( uint32_t ei : in_edges_[g] )
    {
      fr.in_future_removed += frozen_[ei];
      future_ -= frozen_[ei];
      fr.frozen_undo.emplace_back( ei, frozen_[ei] );
      frozen_[ei] = 0;
    }
  }

  void close_node( frame const& fr )
  {
    for ( auto const& [ei, old] : fr.frozen_undo )
    {
      frozen_[ei] = old;
    }
    future_ += fr.in_future_removed;
  }

  /* freezes g's outgoing edges against the bumped consumer bounds */
  void place( uint32_t g, int64_t s, frame& fr )
  {
    sigma_[g] = s;
    for ( uint32_t ei : consumers_[g] )
    {
      uint32_t const c = m_.edges[ei].consumer;
      if ( sigma_[c] >= 0 )
      {
        continue;
      }
      int64_t const d = std::max<int64_t>( 1, std::max( dyn_lb_[c], s + 1 ) - s );
      frozen_[ei] = edge_dff_bound( d, m_.phases );
      future_ += frozen_[ei];
      if ( dyn_lb_[c] < s + 1 )
      {
        fr.lb_undo.emplace_back( c, dyn_lb_[c] );
        dyn_lb_[c] = s + 1;
      }
    }
  }

  void unplace( uint32_t g, frame& fr )
  {
    for ( auto it = fr.lb_undo.rbegin(); it != fr.lb_undo.rend(); ++it )
    {
      dyn_lb_[it->first] = it->second;
    }
    fr.lb_undo.clear();
    for ( uint32_t ei : consumers_[g] )
    {
      if ( sigma_[m_.edges[ei].consumer] >= 0 )
      {
        continue;
      }
      future_ -= frozen_[ei];
      frozen_[ei] = 0;
    }
    sigma_[g] = -1;
  }

  void dfs_rec( size_t k )
  {
    if ( nodes_used_ >= ps_.node_budget )
    {
      return;
    }
    if ( k == m_.clocked.size() )
    {
      if ( partial_ < dfs_best_obj_ )
      {
        dfs_best_obj_ = partial_;
        dfs_best_.sigma = sigma_;
        dfs_best_.phases = m_.phases;
      }
      return;
    }
    uint32_t const g = m_.clocked[k];
    frame fr;
    open_node( g, fr );
    int64_t const lb = exact_lb( g );
    for ( int64_t s = lb; s <= m_.sigma_upper; ++s )
    {
      ++nodes_used_;
      if ( nodes_used_ >= ps_.node_budget )
      {
        break;
      }
      // incoming-edge cost only grows with s; once it alone exceeds the
      // incumbent nothing larger can win
      if ( partial_ + in_edge_cost( g, s ) + future_ >= dfs_best_obj_ )
      {
        break;
      }
      int64_t const own = own_cost( g, s );
      place( g, s, fr );
      if ( partial_ + own + future_ < dfs_best_obj_ )
      {
        partial_ += own;
        dfs_rec( k + 1 );
        partial_ -= own;
      }
      unplace( g, fr );
    }
    close_node( fr );
  }

  bool dfs_lex( size_t k, int64_t target, stage_assignment& out )
  {
    if ( nodes_used_ >= ps_.node_budget )
    {
      return false;
    }
    if ( k == m_.clocked.size() )
    {
      out.sigma = sigma_;
      out.phases = m_.phases;
      return true;
    }
    uint32_t const g = m_.clocked[k];
    frame fr;
    open_node( g, fr );
    bool found = false;
    int64_t const lb = exact_lb( g );
    for ( int64_t s = lb; s <= m_.sigma_upper && !found; ++s )
    {
      ++nodes_used_;
      if ( nodes_used_ >= ps_.node_budget )
      {
        break;
      }
      if ( partial_ + in_edge_cost( g, s ) + future_ > target )
      {
        break;
      }
      int64_t const own = own_cost( g, s );
      place( g, s, fr );
      if ( partial_ + own + future_ <= target )
      {
        partial_ += own;
        found = dfs_lex( k + 1, target, out );
        partial_ -= own;
      }
      unplace( g, fr );
    }
    close_node( fr );
    return found;
  }

  ilp_model const& m_;
  solve_stage_params ps_;
  std::vector<std::vector<uint32_t>> consumers_; // edge indices by producer
  std::vector<std::vector<uint32_t>> in_edges_;  // edge indices by consumer
  std::vector<bool> is_t1_;
  std::vector<int64_t> sigma_;
  std::vector<int64_t> dyn_lb_;
  std::vector<int64_t> frozen_; // admissible future cost currently booked per edge
  int64_t future_{ 0 };
  int64_t partial_{ 0 };
  int64_t nodes_used_{ 0 };
  stage_assignment dfs_best_;
  int64_t dfs_best_obj_{ 0 };
};

} // namespace detail

/*! \brief Minimizes the DFF estimate; optimal when the search completes
 * within its budget, otherwise the best incumbent flagged non-optimal.
 * Deterministic for a fixed budget; ties break toward the
 * lexicographically smallest stage vector in topological order.
 */
inline stage_assignment solve_stages( ilp_model const& model, solve_stage_params const& ps = {} )
{
  detail::stage_search search( model, ps );
  auto a = search.run();
  if ( !model.feasible( a ) )
  {
    throw std::logic_error( "solve_stages: infeasible result" );
  }
  a.objective = model.evaluate( a );
  return a;
}

/*! \brief Serializes the literal model in CPLEX LP format. */
inline std::string write_lp( ilp_model const& m )
{
  std::ostringstream os;
  os << "\\ sfqmap stage-assignment model\n";
  os << "Minimize\n obj:";
  for ( size_t i = 0; i < m.objective_terms.size(); ++i )
  {
    auto const& t = m.objective_terms[i];
    os << ( i == 0 ? " " : " + " ) << t.coef << " " << m.vars[t.var].name;
  }
  if ( m.objective_terms.empty() )
  {
    os << " 0 s_dummy";
  }
  os << "\nSubject To\n";
  auto print_terms = [&]( std::vector<ilp_model::lin_term> const& terms ) {
    for ( size_t i = 0; i < terms.size(); ++i )
    {
      int64_t const c = terms[i].coef;
      if ( i == 0 )
      {
        os << " " << c << " " << m.vars[terms[i].var].name;
      }
      else
      {
        os << ( c >= 0 ? " + " : " - " ) << std::abs( c ) << " " << m.vars[terms[i].var].name;
      }
    }
  };
  for ( auto const& r : m.rows )
  {
    constexpr int64_t none_lo = std::numeric_limits<int64_t>::min();
    constexpr int64_t none_hi = std::numeric_limits<int64_t>::max();
    if ( r.lb != none_lo && r.ub != none_hi && r.lb == r.ub )
    {
      os << " " << r.name << ":";
      print_terms( r.terms );
      os << " = " << r.lb << "\n";
    }
    else
    {
      if ( r.lb != none_lo )
      {
        os << " " << r.name << ":";
        print_terms( r.terms );
        os << " >= " << r.lb << "\n";
      }
      if ( r.ub != none_hi )
      {
        os << " " << r.name << "_u:";
        print_terms( r.terms );
        os << " <= " << r.ub << "\n";
      }
    }
  }
  os << "Bounds\n";
  for ( auto const& v : m.vars )
  {
    if ( !v.binary )
    {
      os << " " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";
    }
  }
  os << "Generals\n";
  for ( auto const& v : m.vars )
  {
    if ( !v.binary )
    {
      os << " " << v.name << "\n";
    }
  }
  os << "Binary\n";
  for ( auto const& v : m.vars )
  {
    if ( v.binary )
    {
      os << " " << v.name << "\n";
    }
  }
  os << "End\n";
  return os.str();
}

/*! \brief Reads an external solution as `name value` lines.
 *
 * Only the s_<node> variables are consumed; anything else is ignored.
 * The assignment is checked against the structural constraints.
 */
inline stage_assignment read_stage_solution( ilp_model const& m, std::istream& in )
{
  stage_assignment a;
  a.phases = m.phases;
  a.sigma.assign( m.lower.size(), -1 );
  std::string name;
  double value = 0.0;
  while ( in >> name >> value )
  {
    if ( name.rfind( "s_", 0 ) == 0 )
    {
      uint32_t const id = static_cast<uint32_t>( std::stoul( name.substr( 2 ) ) );
      if ( id < a.sigma.size() )
      {
        a.sigma[id] = static_cast<int64_t>( value + 0.5 );
      }
    }
  }
  if ( !m.feasible( a ) )
  {
    throw std::invalid_argument( "read_stage_solution: assignment violates the model" );
  }
  a.objective = m.evaluate( a );
  a.optimal = false; // external proof status is unknown
  return a;
}

} // namespace sfqmap
