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
  \file t1_matching.hpp
  \brief Boolean matching of same-leaf cut groups against the T1 family

  Cuts over identical leaves whose functions fall into
  {XOR3, MAJ3, OR3, !MAJ3, !OR3} under one shared input-polarity vector
  are grouped into candidates, scored by the area they reclaim, and
  rewritten greedily in gain order.
*/

#pragma once

#include "cut_enumeration.hpp"
#include "netlist.hpp"
#include "t1_cell.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace sfqmap
{

struct t1_match
{
  t1_output role;
  uint8_t polarity;       // bit i negates leaf i
  bool output_complement; // SUM only: odd negation parity folded into the output
};

/*! \brief All T1 family members equal to `tt` under some input polarity.
 *
 * Reports one entry per (role, polarity). XOR3 additionally matches its
 * complement, reported as an output complement. Functions that do not
 * depend on all three variables never match.
 */
inline std::vector<t1_match> match_t1_family( uint8_t tt )
{
  std::vector<t1_match> out;
  if ( !tt3_full_support( tt ) )
  {
    return out;
  }
  for ( uint8_t pol = 0; pol < 8; ++pol )
  {
    for ( uint8_t r = 0; r < t1_output_count; ++r )
    {
      auto const role = static_cast<t1_output>( r );
      uint8_t const realized = tt3_negate_inputs( t1_output_function( role ), pol );
      if ( realized == tt )
      {
        out.push_back( t1_match{ role, pol, false } );
      }
      else if ( role == t1_output::sum && static_cast<uint8_t>( ~realized ) == tt )
      {
        out.push_back( t1_match{ role, pol, true } );
      }
    }
  }
  return out;
}

namespace detail
{

/* MFFC limited to the cut cone: leaves survive the rewrite, so the
 * reclaimable cone stops above them */
inline std::vector<uint32_t> mffc_above_leaves( netlist const& net, uint32_t root,
                                                std::array<uint32_t, 3> const& leaves )
{
  std::vector<uint32_t> refs( net.size(), 0u );
  for ( uint32_t id = 0; id < net.size(); ++id )
  {
    if ( net.is_dead( id ) )
    {
      continue;
    }
    for ( auto const& f : net.node_at( id ).fanins )
    {
      ++refs[f.node];
    }
  }
  auto const is_leaf = [&]( uint32_t id ) {
    return id == leaves[0] || id == leaves[1] || id == leaves[2];
  };
  std::vector<uint32_t> cone{ root };
  std::vector<bool> in_cone( net.size(), false );
  in_cone[root] = true;
  std::vector<uint32_t> stack{ root };
  while ( !stack.empty() )
  {
    uint32_t const v = stack.back();
    stack.pop_back();
    for ( auto const& f : net.node_at( v ).fanins )
    {
      if ( is_leaf( f.node ) || in_cone[f.node] || net.kind_of( f.node ) == gate_kind::pi )
      {
        continue;
      }
      if ( --refs[f.node] == 0 )
      {
        in_cone[f.node] = true;
        cone.push_back( f.node );
        stack.push_back( f.node );
      }
    }
  }
  std::sort( cone.begin(), cone.end() );
  return cone;
}

inline int64_t gate_cost_of( netlist const& net, uint32_t id, cost_table const& costs )
{
  if ( net.kind_of( id ) == gate_kind::t1 )
  {
    return net.t1_configured_cost( id, costs );
  }
  return costs.cost( net.kind_of( id ) );
}

} // namespace detail

/*! \brief Area gain of one candidate on the current net.
 *
 * Reclaimed: every gate in the union of the roots' leaf-bounded MFFCs,
 * the splitter trees that become internal to that set, and the leaf
 * splitters freed because the leaves now feed one cell. Charged: the
 * configured T1 (base, input inverters for negated leaves, output
 * inverters for NCARRY/NORQ) and a NOT wherever a complemented SUM can
 * only land on a PO pin.
 */
inline int64_t area_gain( netlist const& net, t1_candidate const& cand, cost_table const& costs )
{
  auto const fo = net.fanouts();
  auto fanout_count = [&]( net_id nid ) -> int64_t {
    auto const it = fo.find( nid );
    return it == fo.end() ? 0 : static_cast<int64_t>( it->second.size() );
  };

  std::set<uint32_t> removed;
  for ( auto const& m : cand.matches )
  {
    for ( uint32_t v : detail::mffc_above_leaves( net, m.root, cand.leaves ) )
    {
      removed.insert( v );
    }
  }

  int64_t reclaimed = 0;
  for ( uint32_t v : removed )
  {
    reclaimed += detail::gate_cost_of( net, v, costs );
    bool const is_root = std::any_of( cand.matches.begin(), cand.matches.end(),
                                      [&]( auto const& m ) { return m.root == v; } );
    if ( !is_root )
    {
      int64_t const f = fanout_count( net_id{ v, t1_output::sum } );
      if ( f > 1 )
      {
        reclaimed += ( f - 1 ) * costs.cost( gate_kind::splitter );
      }
    }
  }
  // leaf splitters: edges into the removed set collapse into one T1 input
  for ( size_t i = 0; i < 3; ++i )
  {
    net_id const leaf_net{ cand.leaves[i], cand.leaf_pins[i] };
    int64_t into_removed = 0;
    auto const it = fo.find( leaf_net );
    if ( it != fo.end() )
    {
      for ( auto const& ref : it->second )
      {
        if ( removed.count( ref.consumer ) )
        {
          ++into_removed;
        }
      }
    }
    int64_t const f_old = fanout_count( leaf_net );
    int64_t const f_new = f_old - into_removed + 1;
    auto const splitters = []( int64_t f ) { return f > 1 ? f - 1 : 0; };
    reclaimed += ( splitters( f_old ) - splitters( f_new ) ) * costs.cost( gate_kind::splitter );
  }

  int64_t t1_cost = costs.t1_base;
  for ( bool neg : cand.polarity )
  {
    if ( neg )
    {
      t1_cost += costs.inverter_in;
    }
  }
  for ( auto const& m : cand.matches )
  {
    if ( m.role == t1_output::ncarry || m.role == t1_output::norq )
    {
      t1_cost += costs.inverter_out;
    }
    // complement folding across the rewired edges: PO pins cannot absorb
    // a flipped polarity, gate pins can
    if ( m.role == t1_output::sum && m.output_complement )
    {
      auto const it = fo.find( net_id{ m.root, t1_output::sum } );
      if ( it != fo.end() )
      {
        for ( auto const& ref : it->second )
        {
          if ( net.kind_of( ref.consumer ) == gate_kind::po )
          {
            bool const before = net.node_at( ref.consumer ).fanins[ref.fanin_index].complemented;
            t1_cost += ( before ? -1 : 1 ) * costs.cost( gate_kind::inv );
          }
        }
      }
    }
  }
  return reclaimed - t1_cost;
}

/*! \brief Buckets matched cuts by (leaves, polarity) into candidates.
 *
 * A bucket survives with two or more distinct roles, or with one role
 * when its gain is already positive. Candidates come back sorted by gain,
 * descending.
 */
inline std::vector<t1_candidate> group_candidates( netlist const& net, cut_set const& cuts,
                                                   cost_table const& costs )
{
  auto const fo = net.fanouts();
  struct bucket_entry
  {
    uint32_t root;
    bool output_complement;
    int64_t mffc_area;
  };
  using bucket_key = std::pair<std::array<uint32_t, 3>, uint8_t>;
  std::map<bucket_key, std::map<t1_output, bucket_entry>> buckets;

  for ( uint32_t id : net.topo_order() )
  {
    auto const kind = net.kind_of( id );
    if ( !gate_is_clocked( kind ) || kind == gate_kind::t1 )
    {
      continue;
    }
    if ( !fo.count( net_id{ id, t1_output::sum } ) )
    {
      continue; // dangling
    }
    for ( auto const& c : cuts.at( id ) )
    {
      if ( c.leaves.size() != 3 )
      {
        continue;
      }
      for ( auto const& m : match_t1_family( c.tt ) )
      {
        std::array<uint32_t, 3> const leaves{ c.leaves[0], c.leaves[1], c.leaves[2] };
        auto& slot = buckets[{ leaves, m.polarity }];
        int64_t area = 0;
        for ( uint32_t v : detail::mffc_above_leaves( net, id, leaves ) )
        {
          area += detail::gate_cost_of( net, v, costs );
        }
        auto const it = slot.find( m.role );
        if ( it == slot.end() || area > it->second.mffc_area ||
             ( area == it->second.mffc_area && id < it->second.root ) )
        {
          slot[m.role] = bucket_entry{ id, m.output_complement, area };
        }
      }
    }
  }

  std::vector<t1_candidate> cands;
  for ( auto const& [bkey, roles] : buckets )
  {
    t1_candidate cand;
    cand.leaves = bkey.first;
    for ( int i = 0; i < 3; ++i )
    {
      cand.polarity[i] = ( bkey.second >> i ) & 1u;
    }
    std::set<uint32_t> roots;
    for ( auto const& [role, entry] : roles )
    {
      if ( roots.count( entry.root ) )
      {
        continue; // one root binds at most one output
      }
      roots.insert( entry.root );
      cand.matches.push_back( t1_candidate::match{ role, entry.root, entry.output_complement } );
    }
    // drop roles whose root sits inside another role's reclaimed cone
    for ( bool changed = true; changed; )
    {
      changed = false;
      for ( size_t i = 0; i < cand.matches.size() && !changed; ++i )
      {
        for ( size_t j = 0; j < cand.matches.size() && !changed; ++j )
        {
          if ( i == j )
          {
            continue;
          }
          auto const cone =
              detail::mffc_above_leaves( net, cand.matches[j].root, cand.leaves );
          if ( std::binary_search( cone.begin(), cone.end(), cand.matches[i].root ) )
          {
            cand.matches.erase( cand.matches.begin() + static_cast<long>( i ) );
            changed = true;
          }
        }
      }
    }
    if ( cand.matches.empty() )
    {
      continue;
    }
    cand.delta_area = area_gain( net, cand, costs );
    if ( cand.matches.size() >= 2 || cand.delta_area > 0 )
    {
      cands.push_back( std::move( cand ) );
    }
  }
  std::sort( cands.begin(), cands.end(), []( t1_candidate const& a, t1_candidate const& b ) {
    return std::tuple( -a.delta_area, a.leaves, a.polarity ) <
           std::tuple( -b.delta_area, b.leaves, b.polarity );
  } );
  return cands;
}

struct rewrite_stats
{
  int64_t found{ 0 };
  int64_t used{ 0 };
};

/*! \brief Greedy sweep in gain order with recomputation.
 *
 * A candidate is applied iff its gain, recomputed against the current
 * net, is still positive and none of its roots was consumed by an
 * earlier replacement. A consumed leaf is not fatal: the leaf forwards
 * onto the T1 output that replaced it (output complements fold into the
 * leaf polarity). `found` counts candidates whose initial gain was
 * positive; `used` counts applications, so found >= used.
 */
inline rewrite_stats select_and_rewrite( netlist& net, std::vector<t1_candidate> const& cands,
                                         cost_table const& costs )
{
  rewrite_stats st;
  for ( auto const& c : cands )
  {
    if ( c.delta_area > 0 )
    {
      ++st.found;
    }
  }
  std::vector<signal> forward( net.size() + cands.size() * 2 + 16,
                               signal( UINT32_MAX ) ); // replaced root -> T1 output
  auto grow = [&]() {
    if ( forward.size() < net.size() )
    {
      forward.resize( net.size() * 2, signal( UINT32_MAX ) );
    }
  };
  for ( auto const& c : cands )
  {
    t1_candidate resolved = c;
    bool stale = false;
    for ( size_t i = 0; i < 3 && !stale; ++i )
    {
      if ( !net.is_dead( resolved.leaves[i] ) )
      {
        continue;
      }
      signal const f = forward[resolved.leaves[i]];
      if ( f.node == UINT32_MAX )
      {
        stale = true;
        break;
      }
      resolved.leaves[i] = f.node;
      resolved.polarity[i] = resolved.polarity[i] ^ f.complemented;
      resolved.leaf_pins[i] = f.pin;
    }
    for ( auto const& m : resolved.matches )
    {
      stale |= net.is_dead( m.root );
    }
    if ( stale )
    {
      continue;
    }
    // forwarding may have merged two leaves onto one net
    bool degenerate = false;
    for ( int i = 0; i < 3 && !degenerate; ++i )
    {
      for ( int j = i + 1; j < 3; ++j )
      {
        degenerate |= resolved.leaves[i] == resolved.leaves[j] &&
                      resolved.leaf_pins[i] == resolved.leaf_pins[j];
      }
    }
    if ( degenerate )
    {
      continue;
    }
    if ( area_gain( net, resolved, costs ) <= 0 )
    {
      continue;
    }
    uint32_t const cell = replace_cone( net, resolved );
    grow();
    for ( auto const& m : resolved.matches )
    {
      forward[m.root] = signal( cell, m.output_complement, m.role );
    }
    ++st.used;
  }
  return st;
}

} // namespace sfqmap
