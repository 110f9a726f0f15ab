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
  \file cut_enumeration.hpp
  \brief 3-feasible cut enumeration with truth tables
*/

#pragma once

#include "netlist.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace sfqmap
{

/*! \brief A cut: root, up to three sorted leaves, function over the leaves.
 *
 * The truth table is stored 8-bit with leaf 0 on the least-significant
 * input; unused leaf positions are constant-extended.
 */
struct cut
{
  uint32_t root{ 0 };
  std::vector<uint32_t> leaves; // strictly ascending node ids
  uint8_t tt{ 0 };
  std::vector<uint32_t> cone;   // nodes between leaves and root, root included; empty for the trivial cut

  bool is_trivial() const { return leaves.size() == 1 && leaves[0] == root; }
};

class cut_set
{
public:
  explicit cut_set( size_t num_nodes ) : cuts_( num_nodes ) {}

  std::vector<cut> const& at( uint32_t node ) const { return cuts_.at( node ); }
  std::vector<cut>& at( uint32_t node ) { return cuts_.at( node ); }
  size_t num_nodes() const { return cuts_.size(); }

  size_t total() const
  {
    size_t s = 0;
    for ( auto const& c : cuts_ )
    {
      s += c.size();
    }
    return s;
  }

private:
  std::vector<std::vector<cut>> cuts_;
};

namespace detail
{

/* re-expresses `tt` over leaf tuple `sub` as a table over `super` */
inline uint8_t tt3_expand( uint8_t tt, std::vector<uint32_t> const& sub,
                           std::vector<uint32_t> const& super )
{
  uint8_t out = 0;
  for ( uint8_t m = 0; m < 8; ++m )
  {
    uint8_t subm = 0;
    for ( size_t j = 0; j < sub.size(); ++j )
    {
      auto const it = std::lower_bound( super.begin(), super.end(), sub[j] );
      auto const pos = static_cast<uint8_t>( it - super.begin() );
      if ( ( m >> pos ) & 1u )
      {
        subm |= static_cast<uint8_t>( 1u << j );
      }
    }
    if ( ( tt >> subm ) & 1u )
    {
      out |= static_cast<uint8_t>( 1u << m );
    }
  }
  return out;
}

inline uint8_t apply_gate_tt( gate_kind kind, std::vector<uint8_t> const& ins )
{
  switch ( kind )
  {
  case gate_kind::inv:
    return static_cast<uint8_t>( ~ins[0] );
  case gate_kind::buf:
  case gate_kind::dff:
  case gate_kind::splitter:
    return ins[0];
  case gate_kind::and2:
    return ins[0] & ins[1];
  case gate_kind::or2:
    return ins[0] | ins[1];
  case gate_kind::xor2:
    return ins[0] ^ ins[1];
  case gate_kind::maj3:
    return static_cast<uint8_t>( ( ins[0] & ins[1] ) | ( ins[0] & ins[2] ) | ( ins[1] & ins[2] ) );
  default:
    throw std::invalid_argument( "cut enumeration: unsupported gate kind" );
  }
}

inline bool leaves_dominated( std::vector<uint32_t> const& small, std::vector<uint32_t> const& big )
{
  return std::includes( big.begin(), big.end(), small.begin(), small.end() );
}

} // namespace detail

/*! \brief Recomputes a cut's function by exhaustive cone simulation.
 *
 * Walks back from the root; throws if some path reaches a PI that is not
 * among the leaves (the leaves do not cut the cone) or if the cone
 * contains a T1 cell.
 */
inline uint8_t cut_function( netlist const& net, cut const& c )
{
  if ( c.is_trivial() )
  {
    return 0xaa;
  }
  std::vector<uint32_t> cone_nodes;
  std::vector<uint32_t> stack{ c.root };
  std::vector<bool> seen( net.size(), false );
  seen[c.root] = true;
  auto const is_leaf = [&]( uint32_t id ) {
    return std::binary_search( c.leaves.begin(), c.leaves.end(), id );
  };
  if ( is_leaf( c.root ) )
  {
    throw std::invalid_argument( "cut_function: root listed as leaf of a non-trivial cut" );
  }
  while ( !stack.empty() )
  {
    uint32_t const v = stack.back();
    stack.pop_back();
    cone_nodes.push_back( v );
    if ( net.kind_of( v ) == gate_kind::t1 )
    {
      throw std::invalid_argument( "cut_function: T1 cell inside the cone" );
    }
    for ( auto const& f : net.node_at( v ).fanins )
    {
      if ( is_leaf( f.node ) || seen[f.node] )
      {
        continue;
      }
      if ( net.kind_of( f.node ) == gate_kind::pi )
      {
        throw std::invalid_argument( "cut_function: leaves do not cut the cone" );
      }
      seen[f.node] = true;
      stack.push_back( f.node );
    }
  }
  std::sort( cone_nodes.begin(), cone_nodes.end() );

  uint8_t tt = 0;
  for ( uint8_t m = 0; m < 8; ++m )
  {
    std::vector<int8_t> value( net.size(), -1 );
    for ( size_t j = 0; j < c.leaves.size(); ++j )
    {
      value[c.leaves[j]] = static_cast<int8_t>( ( m >> j ) & 1u );
    }
    auto eval = [&]( auto&& self, uint32_t id ) -> uint8_t {
      if ( value[id] >= 0 )
      {
        return static_cast<uint8_t>( value[id] );
      }
      auto const& g = net.node_at( id );
      std::vector<uint8_t> ins;
      ins.reserve( g.fanins.size() );
      for ( auto const& f : g.fanins )
      {
        uint8_t v = self( self, f.node );
        ins.push_back( f.complemented ? static_cast<uint8_t>( v ^ 1u ) : v );
      }
      uint8_t const r = detail::apply_gate_tt( g.kind, ins ) & 1u;
      value[id] = static_cast<int8_t>( r );
      return r;
    };
    if ( eval( eval, c.root ) )
    {
      tt |= static_cast<uint8_t>( 1u << m );
    }
  }
  return tt;
}

/*! \brief Bottom-up enumeration of k-feasible cuts, k = 3.
 *
 * Per-node lists are pruned by dominance (a cut whose leaves form a
 * subset of another's replaces it), ranked by (leaf count, cone size,
 * lexicographic leaves) and truncated to `cut_limit`; the trivial cut is
 * always retained. Identical inputs yield identical cut lists. The net
 * must not contain T1 cells yet.
 */
inline cut_set enumerate_cuts( netlist const& net, uint32_t k = 3, uint32_t cut_limit = 16 )
{
  if ( k < 1 || k > 3 )
  {
    throw std::invalid_argument( "enumerate_cuts: only k <= 3 supported" );
  }
  if ( cut_limit < 1 )
  {
    throw std::invalid_argument( "enumerate_cuts: cut_limit must be positive" );
  }
  cut_set cs( net.size() );
  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    if ( g.kind == gate_kind::po )
    {
      continue;
    }
    if ( g.kind == gate_kind::t1 )
    {
      throw std::invalid_argument( "enumerate_cuts: net already contains T1 cells" );
    }
    std::vector<cut> list;
    if ( g.kind != gate_kind::pi )
    {
      // merge one cut per fanin, all combinations
      std::vector<size_t> pick( g.fanins.size(), 0 );
      while ( true )
      {
        std::vector<uint32_t> leaves;
        std::vector<uint32_t> cone{ id };
        bool ok = true;
        for ( size_t j = 0; j < g.fanins.size() && ok; ++j )
        {
          auto const& sub = cs.at( g.fanins[j].node )[pick[j]];
          for ( uint32_t l : sub.leaves )
          {
            if ( !std::binary_search( leaves.begin(), leaves.end(), l ) )
            {
              leaves.insert( std::upper_bound( leaves.begin(), leaves.end(), l ), l );
            }
          }
          for ( uint32_t n : sub.cone )
          {
            cone.push_back( n );
          }
          if ( leaves.size() > k )
          {
            ok = false;
          }
        }
        if ( ok )
        {
          std::sort( cone.begin(), cone.end() );
          cone.erase( std::unique( cone.begin(), cone.end() ), cone.end() );
          std::vector<uint8_t> ins;
          for ( size_t j = 0; j < g.fanins.size(); ++j )
          {
            auto const& sub = cs.at( g.fanins[j].node )[pick[j]];
            uint8_t t = detail::tt3_expand( sub.tt, sub.leaves, leaves );
            ins.push_back( g.fanins[j].complemented ? static_cast<uint8_t>( ~t ) : t );
          }
          cut c;
          c.root = id;
          c.leaves = std::move( leaves );
          c.tt = detail::apply_gate_tt( g.kind, ins );
          c.cone = std::move( cone );
          bool dominated = false;
          for ( auto const& other : list )
          {
            if ( detail::leaves_dominated( other.leaves, c.leaves ) )
            {
              dominated = true;
              break;
            }
          }
          if ( !dominated )
          {
            std::erase_if( list, [&]( cut const& other ) {
              return detail::leaves_dominated( c.leaves, other.leaves );
            } );
            list.push_back( std::move( c ) );
          }
        }
        // advance the cartesian index
        size_t j = 0;
        for ( ; j < pick.size(); ++j )
        {
          if ( ++pick[j] < cs.at( g.fanins[j].node ).size() )
          {
            break;
          }
          pick[j] = 0;
        }
        if ( j == pick.size() )
        {
          break;
        }
      }
    }
    cut trivial;
    trivial.root = id;
    trivial.leaves = { id };
    trivial.tt = 0xaa;
    list.push_back( std::move( trivial ) );
    std::sort( list.begin(), list.end(), []( cut const& a, cut const& b ) {
      return std::tuple( a.leaves.size(), a.cone.size(), a.leaves ) <
             std::tuple( b.leaves.size(), b.cone.size(), b.leaves );
    } );
    if ( list.size() > cut_limit )
    {
      list.resize( cut_limit );
    }
    cs.at( id ) = std::move( list );
  }
  return cs;
}

} // namespace sfqmap
