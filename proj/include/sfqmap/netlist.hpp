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
  \file netlist.hpp
  \brief Gate-level netlist with complemented edges and multi-output T1 cells

  The netlist is a DAG of typed gates. Every gate except PI, PO and
  SPLITTER is a clocked element. A T1 cell has three data inputs and up
  to five used outputs; consumers select an output through the `pin`
  field of their fanin signal. Construction is single-writer; all
  read-only traversals are const and safe to run concurrently.
*/

#pragma once

#include "t1_cell.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sfqmap
{

enum class gate_kind : uint8_t
{
  pi = 0,
  po,
  and2,
  or2,
  xor2,
  inv,
  buf,
  maj3,
  dff,
  splitter,
  t1
};

inline constexpr size_t gate_kind_count = 11u;

inline constexpr std::array<std::string_view, gate_kind_count> gate_kind_names = {
    "PI", "PO", "AND2", "OR2", "XOR2", "NOT", "BUF", "MAJ3", "DFF", "SPLITTER", "T1"};

/*! \brief Number of fanins required by a gate kind. */
inline constexpr uint32_t gate_arity( gate_kind k )
{
  switch ( k )
  {
  case gate_kind::pi:
    return 0u;
  case gate_kind::po:
  case gate_kind::inv:
  case gate_kind::buf:
  case gate_kind::dff:
  case gate_kind::splitter:
    return 1u;
  case gate_kind::and2:
  case gate_kind::or2:
  case gate_kind::xor2:
    return 2u;
  case gate_kind::maj3:
  case gate_kind::t1:
  default:
    return 3u;
  }
}

/*! \brief Clocked elements consume their window and fire at their stage.
 *
 * PIs and POs are interface markers; splitters branch a pulse passively.
 */
inline constexpr bool gate_is_clocked( gate_kind k )
{
  return k != gate_kind::pi && k != gate_kind::po && k != gate_kind::splitter;
}

/*! \brief An edge into a gate: driving node, output pin, complement flag.
 *
 * `pin` selects the output of a T1 driver and is `sum` for every other
 * kind. Complement flags are free on gate inputs, priced as an input
 * inverter on T1 fanins, and priced as a NOT when a PO reads a
 * complemented net.
 */
struct signal
{
  uint32_t node{ 0 };
  bool complemented{ false };
  t1_output pin{ t1_output::sum };

  signal() = default;
  signal( uint32_t n, bool c = false, t1_output p = t1_output::sum )
      : node( n ), complemented( c ), pin( p ) {}

  signal operator!() const { return signal( node, !complemented, pin ); }

  friend bool operator==( signal const& a, signal const& b )
  {
    return a.node == b.node && a.complemented == b.complemented && a.pin == b.pin;
  }
  friend bool operator<( signal const& a, signal const& b )
  {
    return std::tie( a.node, a.complemented, a.pin ) < std::tie( b.node, b.complemented, b.pin );
  }
};

struct gate
{
  gate_kind kind{ gate_kind::pi };
  std::vector<signal> fanins;
  bool dead{ false };
};

/*! \brief An output net: a node together with one of its output pins. */
struct net_id
{
  uint32_t node{ 0 };
  t1_output pin{ t1_output::sum };

  friend bool operator==( net_id const& a, net_id const& b )
  {
    return a.node == b.node && a.pin == b.pin;
  }
  friend bool operator<( net_id const& a, net_id const& b )
  {
    return std::tie( a.node, a.pin ) < std::tie( b.node, b.pin );
  }
};

struct fanout_ref
{
  uint32_t consumer{ 0 };
  uint32_t fanin_index{ 0 };
};

using fanout_map = std::map<net_id, std::vector<fanout_ref>>;

/*! \brief JJ costs per gate kind plus the T1 configuration prices.
 *
 * A T1 configured as a full adder (three positive inputs, SUM and CARRY
 * used) costs exactly `t1_base`; each used inverted output adds
 * `inverter_out` and each negated input adds `inverter_in`.
 */
struct cost_table
{
  std::array<std::optional<int32_t>, gate_kind_count> gate_cost{};
  int32_t t1_base{ 29 };
  int32_t inverter_in{ 9 };
  int32_t inverter_out{ 9 };

  /*! \brief Representative RSFQ library values; override via file. */
  static cost_table defaults()
  {
    cost_table t;
    t.set( gate_kind::pi, 0 );
    t.set( gate_kind::po, 0 );
    t.set( gate_kind::and2, 10 );
    t.set( gate_kind::or2, 8 );
    t.set( gate_kind::xor2, 8 );
    t.set( gate_kind::inv, 9 );
    t.set( gate_kind::buf, 6 );
    t.set( gate_kind::maj3, 23 );
    t.set( gate_kind::dff, 6 );
    t.set( gate_kind::splitter, 3 );
    return t;
  }

  static cost_table empty() { return cost_table{}; }

  void set( gate_kind k, int32_t c )
  {
    if ( c < 0 )
    {
      throw std::invalid_argument( "cost_table: negative cost" );
    }
    gate_cost[static_cast<size_t>( k )] = c;
  }

  int32_t cost( gate_kind k ) const
  {
    auto const& e = gate_cost[static_cast<size_t>( k )];
    if ( !e )
    {
      throw std::invalid_argument( std::string( "cost_table: missing entry for " ) +
                                   std::string( gate_kind_names[static_cast<size_t>( k )] ) );
    }
    return *e;
  }
};

/*! \brief A group of same-leaf cuts mapped onto one T1 cell.
 *
 * All matched roots realize members of the T1 function family over the
 * identical (leaves, polarity) pair. SUM absorbs an odd input-negation
 * count into an output complement.
 */
struct t1_candidate
{
  struct match
  {
    t1_output role{ t1_output::sum };
    uint32_t root{ 0 };
    bool output_complement{ false }; // only ever set for SUM
  };

  std::array<uint32_t, 3> leaves{};   // strictly ascending node ids
  std::array<bool, 3> polarity{};     // true = leaf enters negated
  // leaf output pins: sum unless a leaf was forwarded onto a T1 output
  // by an earlier replacement
  std::array<t1_output, 3> leaf_pins{ t1_output::sum, t1_output::sum, t1_output::sum };
  std::vector<match> matches;         // distinct roles, sorted by role
  int64_t delta_area{ 0 };            // area gain estimate at grouping time
};

class netlist
{
public:
  netlist() = default;

  uint32_t add_pi() { return add_gate( gate_kind::pi, {} ); }

  uint32_t add_po( signal s ) { return add_gate( gate_kind::po, { s } ); }

  /*! \brief Appends a gate; fanins must reference existing live nodes. */
  uint32_t add_gate( gate_kind kind, std::vector<signal> fanins )
  {
    if ( fanins.size() != gate_arity( kind ) )
    {
      throw std::invalid_argument( "add_gate: arity mismatch for " +
                                   std::string( gate_kind_names[static_cast<size_t>( kind )] ) );
    }
    for ( auto const& f : fanins )
    {
      if ( f.node >= nodes_.size() || nodes_[f.node].dead )
      {
        throw std::invalid_argument( "add_gate: dangling fanin reference" );
      }
      if ( f.pin != t1_output::sum && nodes_[f.node].kind != gate_kind::t1 )
      {
        throw std::invalid_argument( "add_gate: output pin on a single-output driver" );
      }
      if ( nodes_[f.node].kind == gate_kind::po )
      {
        throw std::invalid_argument( "add_gate: PO used as fanin" );
      }
    }
    uint32_t const id = static_cast<uint32_t>( nodes_.size() );
    nodes_.push_back( gate{ kind, std::move( fanins ), false } );
    if ( kind == gate_kind::pi )
    {
      pis_.push_back( id );
    }
    else if ( kind == gate_kind::po )
    {
      pos_.push_back( id );
    }
    if ( topo_valid_ )
    {
      topo_.push_back( id ); // appending preserves topological order
    }
    return id;
  }

  size_t size() const { return nodes_.size(); }

  size_t num_live() const
  {
    return static_cast<size_t>(
        std::count_if( nodes_.begin(), nodes_.end(), []( gate const& g ) { return !g.dead; } ) );
  }

  gate const& node_at( uint32_t id ) const { return nodes_.at( id ); }
  gate_kind kind_of( uint32_t id ) const { return nodes_.at( id ).kind; }
  bool is_dead( uint32_t id ) const { return nodes_.at( id ).dead; }

  std::vector<uint32_t> const& pis() const { return pis_; }
  std::vector<uint32_t> const& pos() const { return pos_; }

  /*! \brief Live nodes in topological order (deterministic: min-id first). */
  std::vector<uint32_t> const& topo_order() const
  {
    if ( !topo_valid_ )
    {
      rebuild_topo();
    }
    return topo_;
  }

  /*! \brief Consumer edges per output net; PO reads count as fanout. */
  fanout_map fanouts() const
  {
    fanout_map m;
    for ( uint32_t id = 0; id < nodes_.size(); ++id )
    {
      if ( nodes_[id].dead )
      {
        continue;
      }
      for ( uint32_t k = 0; k < nodes_[id].fanins.size(); ++k )
      {
        auto const& f = nodes_[id].fanins[k];
        m[net_id{ f.node, f.pin }].push_back( fanout_ref{ id, k } );
      }
    }
    return m;
  }

  /*! \brief Maximum number of clocked elements on any PI-to-PO path. */
  uint32_t logic_depth() const
  {
    std::vector<uint32_t> depth( nodes_.size(), 0u );
    for ( uint32_t id : topo_order() )
    {
      auto const& g = nodes_[id];
      uint32_t d = 0;
      for ( auto const& f : g.fanins )
      {
        d = std::max( d, depth[f.node] );
      }
      depth[id] = d + ( gate_is_clocked( g.kind ) ? 1u : 0u );
    }
    uint32_t best = 0;
    for ( uint32_t po : pos_ )
    {
      if ( !nodes_[po].dead )
      {
        best = std::max( best, depth[po] );
      }
    }
    return best;
  }

  /*! \brief Total JJ count: gate costs, T1 configurations, splitter trees.
   *
   * Fanout f > 1 on any net implies f-1 splitters. A complemented PO
   * fanin is charged one NOT (the one complement that cannot be folded
   * into a downstream gate).
   */
  int64_t area( cost_table const& costs ) const
  {
    int64_t total = 0;
    std::map<net_id, uint32_t> fanout_count;
    for ( uint32_t id = 0; id < nodes_.size(); ++id )
    {
      auto const& g = nodes_[id];
      if ( g.dead )
      {
        continue;
      }
      for ( auto const& f : g.fanins )
      {
        ++fanout_count[net_id{ f.node, f.pin }];
      }
      switch ( g.kind )
      {
      case gate_kind::pi:
        break;
      case gate_kind::po:
        if ( g.fanins[0].complemented )
        {
          total += costs.cost( gate_kind::inv );
        }
        break;
      case gate_kind::t1:
        total += t1_configured_cost( id, costs );
        break;
      default:
        total += costs.cost( g.kind );
        break;
      }
    }
    for ( auto const& [net, f] : fanout_count )
    {
      (void)net;
      if ( f > 1 )
      {
        total += static_cast<int64_t>( f - 1 ) * costs.cost( gate_kind::splitter );
      }
    }
    return total;
  }

  /*! \brief Cost of one T1 cell in its current configuration. */
  int64_t t1_configured_cost( uint32_t id, cost_table const& costs ) const
  {
    auto const& g = nodes_.at( id );
    assert( g.kind == gate_kind::t1 );
    int64_t c = costs.t1_base;
    for ( auto const& f : g.fanins )
    {
      if ( f.complemented )
      {
        c += costs.inverter_in;
      }
    }
    auto const used = t1_used_outputs( id );
    if ( used[static_cast<size_t>( t1_output::ncarry )] )
    {
      c += costs.inverter_out;
    }
    if ( used[static_cast<size_t>( t1_output::norq )] )
    {
      c += costs.inverter_out;
    }
    return c;
  }

  /*! \brief Which outputs of a T1 have at least one consumer. */
  std::array<bool, t1_output_count> t1_used_outputs( uint32_t id ) const
  {
    std::array<bool, t1_output_count> used{};
    for ( uint32_t v = 0; v < nodes_.size(); ++v )
    {
      if ( nodes_[v].dead )
      {
        continue;
      }
      for ( auto const& f : nodes_[v].fanins )
      {
        if ( f.node == id )
        {
          used[static_cast<size_t>( f.pin )] = true;
        }
      }
    }
    return used;
  }

  /*! \brief Maximum fanout-free cone: nodes dead once `root` is removed.
   *
   * Includes `root`; never includes PIs. A node joins the cone when all
   * of its consumer edges lead into the cone.
   */
  std::vector<uint32_t> mffc( uint32_t root ) const
  {
    if ( root >= nodes_.size() || nodes_[root].dead )
    {
      throw std::invalid_argument( "mffc: unknown root" );
    }
    if ( nodes_[root].kind == gate_kind::pi )
    {
      throw std::invalid_argument( "mffc: root is a PI" );
    }
    std::vector<uint32_t> refs( nodes_.size(), 0u );
    for ( uint32_t id = 0; id < nodes_.size(); ++id )
    {
      if ( nodes_[id].dead )
      {
        continue;
      }
      for ( auto const& f : nodes_[id].fanins )
      {
        ++refs[f.node];
      }
    }
    std::vector<uint32_t> cone{ root };
    std::vector<bool> in_cone( nodes_.size(), false );
    in_cone[root] = true;
    std::vector<uint32_t> stack{ root };
    while ( !stack.empty() )
    {
      uint32_t const v = stack.back();
      stack.pop_back();
      for ( auto const& f : nodes_[v].fanins )
      {
        if ( nodes_[f.node].kind == gate_kind::pi || in_cone[f.node] )
        {
          continue;
        }
        assert( refs[f.node] > 0 );
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

  /*! \brief Word-parallel simulation; 64 input vectors per call.
   *
   * Returns one value word per (node, pin). T1 outputs follow the
   * Boolean readout semantics: XOR3, MAJ3, OR3 and their complements.
   */
  std::vector<std::array<uint64_t, t1_output_count>>
  simulate_words( std::span<uint64_t const> pi_words ) const
  {
    if ( pi_words.size() != pis_.size() )
    {
      throw std::invalid_argument( "simulate_words: PI count mismatch" );
    }
    std::vector<std::array<uint64_t, t1_output_count>> val( nodes_.size() );
    for ( size_t i = 0; i < pis_.size(); ++i )
    {
      val[pis_[i]][0] = pi_words[i];
    }
    auto in = [&]( gate const& g, size_t k ) {
      auto const& f = g.fanins[k];
      uint64_t v = val[f.node][static_cast<size_t>( f.pin )];
      return f.complemented ? ~v : v;
    };
    for ( uint32_t id : topo_order() )
    {
      auto const& g = nodes_[id];
      switch ( g.kind )
      {
      case gate_kind::pi:
        break;
      case gate_kind::po:
      case gate_kind::buf:
      case gate_kind::dff:
      case gate_kind::splitter:
        val[id][0] = in( g, 0 );
        break;
      case gate_kind::inv:
        val[id][0] = ~in( g, 0 );
        break;
      case gate_kind::and2:
        val[id][0] = in( g, 0 ) & in( g, 1 );
        break;
      case gate_kind::or2:
        val[id][0] = in( g, 0 ) | in( g, 1 );
        break;
      case gate_kind::xor2:
        val[id][0] = in( g, 0 ) ^ in( g, 1 );
        break;
      case gate_kind::maj3: {
        uint64_t const a = in( g, 0 ), b = in( g, 1 ), c = in( g, 2 );
        val[id][0] = ( a & b ) | ( a & c ) | ( b & c );
        break;
      }
      case gate_kind::t1: {
        uint64_t const a = in( g, 0 ), b = in( g, 1 ), c = in( g, 2 );
        uint64_t const maj = ( a & b ) | ( a & c ) | ( b & c );
        uint64_t const orr = a | b | c;
        val[id][static_cast<size_t>( t1_output::sum )] = a ^ b ^ c;
        val[id][static_cast<size_t>( t1_output::carry )] = maj;
        val[id][static_cast<size_t>( t1_output::orq )] = orr;
        val[id][static_cast<size_t>( t1_output::ncarry )] = ~maj;
        val[id][static_cast<size_t>( t1_output::norq )] = ~orr;
        break;
      }
      }
    }
    return val;
  }

  /*! \brief Evaluates all POs for a single input vector. */
  std::vector<bool> eval( std::vector<bool> const& pi_values ) const
  {
    std::vector<uint64_t> words( pis_.size() );
    for ( size_t i = 0; i < pis_.size(); ++i )
    {
      words[i] = pi_values.at( i ) ? ~uint64_t( 0 ) : 0;
    }
    auto const val = simulate_words( words );
    std::vector<bool> out;
    out.reserve( pos_.size() );
    for ( uint32_t po : pos_ )
    {
      out.push_back( ( val[po][0] & 1u ) != 0 );
    }
    return out;
  }

  void mark_dead( uint32_t id )
  {
    nodes_.at( id ).dead = true;
    topo_valid_ = false;
  }

  void set_fanin( uint32_t id, uint32_t index, signal s )
  {
    nodes_.at( id ).fanins.at( index ) = s;
    topo_valid_ = false;
  }

  /*! \brief Live nodes renumbered into topological order.
   *
   * PI and PO interface order is preserved. Returns the compacted netlist
   * and the old-to-new id map (dead nodes map to UINT32_MAX).
   */
  std::pair<netlist, std::vector<uint32_t>> compact() const
  {
    netlist out;
    std::vector<uint32_t> remap( nodes_.size(), UINT32_MAX );
    for ( uint32_t id : topo_order() )
    {
      auto const& g = nodes_[id];
      std::vector<signal> fanins;
      fanins.reserve( g.fanins.size() );
      for ( auto const& f : g.fanins )
      {
        assert( remap[f.node] != UINT32_MAX );
        fanins.push_back( signal( remap[f.node], f.complemented, f.pin ) );
      }
      remap[id] = out.add_gate( g.kind, std::move( fanins ) );
    }
    out.pis_.clear();
    out.pos_.clear();
    for ( uint32_t pi : pis_ )
    {
      assert( remap[pi] != UINT32_MAX );
      out.pis_.push_back( remap[pi] );
    }
    for ( uint32_t po : pos_ )
    {
      if ( remap[po] != UINT32_MAX )
      {
        out.pos_.push_back( remap[po] );
      }
    }
    return { std::move( out ), std::move( remap ) };
  }

  /*! \brief Restores a recorded PI/PO interface order. */
  void reorder_interface( std::vector<uint32_t> const& pis, std::vector<uint32_t> const& pos )
  {
    auto check = [&]( std::vector<uint32_t> const& given, std::vector<uint32_t>& own ) {
      auto a = given;
      auto b = own;
      std::sort( a.begin(), a.end() );
      std::sort( b.begin(), b.end() );
      if ( a != b )
      {
        throw std::invalid_argument( "reorder_interface: id set mismatch" );
      }
      own = given;
    };
    check( pis, pis_ );
    check( pos, pos_ );
  }

private:
  void rebuild_topo() const
  {
    topo_.clear();
    std::vector<uint32_t> indeg( nodes_.size(), 0u );
    std::vector<std::vector<uint32_t>> consumers( nodes_.size() );
    size_t live = 0;
    for ( uint32_t id = 0; id < nodes_.size(); ++id )
    {
      if ( nodes_[id].dead )
      {
        continue;
      }
      ++live;
      for ( auto const& f : nodes_[id].fanins )
      {
        assert( !nodes_[f.node].dead );
        ++indeg[id];
        consumers[f.node].push_back( id );
      }
    }
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> ready;
    for ( uint32_t id = 0; id < nodes_.size(); ++id )
    {
      if ( !nodes_[id].dead && indeg[id] == 0 )
      {
        ready.push( id );
      }
    }
    while ( !ready.empty() )
    {
      uint32_t const id = ready.top();
      ready.pop();
      topo_.push_back( id );
      for ( uint32_t c : consumers[id] )
      {
        if ( --indeg[c] == 0 )
        {
          ready.push( c );
        }
      }
    }
    if ( topo_.size() != live )
    {
      throw std::logic_error( "netlist: cycle detected" );
    }
    topo_valid_ = true;
  }

  std::vector<gate> nodes_;
  std::vector<uint32_t> pis_;
  std::vector<uint32_t> pos_;
  mutable std::vector<uint32_t> topo_;
  mutable bool topo_valid_{ true };
};

/*! \brief Rewires a candidate's root nets onto one new T1 cell.
 *
 * Every consumer of a matched root is redirected to the corresponding T1
 * output (folding the SUM output complement into the edge), then the
 * cones that became unreachable from the POs are removed. The Boolean
 * function of every PO is preserved.
 *
 * Throws if a root or leaf was consumed by an earlier replacement.
 */
inline uint32_t replace_cone( netlist& net, t1_candidate const& cand )
{
  for ( uint32_t leaf : cand.leaves )
  {
    if ( leaf >= net.size() || net.is_dead( leaf ) )
    {
      throw std::invalid_argument( "replace_cone: stale candidate (leaf removed)" );
    }
  }
  if ( cand.matches.empty() || cand.matches.size() > t1_output_count )
  {
    throw std::invalid_argument( "replace_cone: candidate has no role bindings" );
  }
  for ( auto const& m : cand.matches )
  {
    if ( m.root >= net.size() || net.is_dead( m.root ) )
    {
      throw std::invalid_argument( "replace_cone: stale candidate (root removed)" );
    }
    if ( !gate_is_clocked( net.kind_of( m.root ) ) )
    {
      throw std::invalid_argument( "replace_cone: root is not a gate" );
    }
  }

  std::vector<signal> t1_fanins;
  for ( size_t i = 0; i < 3; ++i )
  {
    t1_fanins.push_back( signal( cand.leaves[i], cand.polarity[i], cand.leaf_pins[i] ) );
  }
  uint32_t const cell = net.add_gate( gate_kind::t1, std::move( t1_fanins ) );

  auto const fo = net.fanouts();
  for ( auto const& m : cand.matches )
  {
    auto const it = fo.find( net_id{ m.root, t1_output::sum } );
    if ( it == fo.end() )
    {
      continue; // dangling root: nothing consumes it, DCE picks it up
    }
    for ( auto const& ref : it->second )
    {
      signal s = net.node_at( ref.consumer ).fanins[ref.fanin_index];
      net.set_fanin( ref.consumer, ref.fanin_index,
                     signal( cell, s.complemented ^ m.output_complement,
                             static_cast<t1_output>( m.role ) ) );
    }
  }

  // sweep the now-dead cones
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
  std::vector<uint32_t> worklist;
  for ( auto const& m : cand.matches )
  {
    if ( refs[m.root] == 0 )
    {
      worklist.push_back( m.root );
    }
  }
  while ( !worklist.empty() )
  {
    uint32_t const v = worklist.back();
    worklist.pop_back();
    if ( net.is_dead( v ) || net.kind_of( v ) == gate_kind::pi )
    {
      continue;
    }
    auto fanins = net.node_at( v ).fanins;
    net.mark_dead( v );
    for ( auto const& f : fanins )
    {
      assert( refs[f.node] > 0 );
      if ( --refs[f.node] == 0 )
      {
        worklist.push_back( f.node );
      }
    }
  }
  return cell;
}

} // namespace sfqmap
