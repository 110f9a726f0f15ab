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
  \file verify.hpp
  \brief Pulse-level T1 model, event simulation, equivalence and schedule checks

  The T1 loop holds one bit. A pulse on T in state 0 emits Q* and stores
  1; in state 1 it emits C* and resets. A pulse on R in state 1 emits S
  and resets; in state 0 it is absorbed. The mapped cell latches the Q*
  and C* emissions and reads everything out synchronously at its own
  stage, so a T1 at stage s consumes input pulses from [s-n, s-1] and its
  reset at s is the cell's clock. Overlapping pulses are reported as
  hazards, never merged silently.
*/

#pragma once

#include "balancing.hpp"
#include "netlist.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sfqmap
{

enum class t1_input_kind : uint8_t
{
  toggle, // T
  reset   // R
};

struct t1_state
{
  bool loop{ false };
};

struct t1_emission
{
  bool q_star{ false };
  bool c_star{ false };
  bool s{ false };
};

/*! \brief One pulse through the T1 loop. */
inline t1_emission t1_pulse_step( t1_state& state, t1_input_kind input )
{
  t1_emission out;
  if ( input == t1_input_kind::toggle )
  {
    if ( !state.loop )
    {
      out.q_star = true;
      state.loop = true;
    }
    else
    {
      out.c_star = true;
      state.loop = false;
    }
  }
  else // reset
  {
    if ( state.loop )
    {
      out.s = true;
      state.loop = false;
    }
    // absorbed in state 0
  }
  return out;
}

struct t1_readout
{
  bool sum{ false };
  bool carry{ false };
  bool orq{ false };
};

/*! \brief Feeds present input pulses in stage order, then the reset.
 *
 * With pairwise distinct arrival stages the readout equals
 * (XOR3, MAJ3, OR3) of the inputs. Duplicate arrival stages are a hazard
 * and rejected.
 */
inline t1_readout t1_truth( std::array<bool, 3> const& inputs,
                            std::array<int64_t, 3> const& arrivals, int64_t reset_stage )
{
  for ( int i = 0; i < 3; ++i )
  {
    for ( int j = i + 1; j < 3; ++j )
    {
      if ( arrivals[i] == arrivals[j] )
      {
        throw std::invalid_argument( "t1_truth: duplicate arrival stage (hazard)" );
      }
    }
    if ( arrivals[i] >= reset_stage )
    {
      throw std::invalid_argument( "t1_truth: arrival at or after the reset stage" );
    }
  }
  std::array<std::pair<int64_t, bool>, 3> order{ { { arrivals[0], inputs[0] },
                                                   { arrivals[1], inputs[1] },
                                                   { arrivals[2], inputs[2] } } };
  std::sort( order.begin(), order.end() );
  t1_state st;
  t1_readout out;
  for ( auto const& [stage, present] : order )
  {
    (void)stage;
    if ( !present )
    {
      continue;
    }
    auto const e = t1_pulse_step( st, t1_input_kind::toggle );
    out.orq |= e.q_star;
    out.carry |= e.c_star;
  }
  auto const e = t1_pulse_step( st, t1_input_kind::reset );
  out.sum = e.s;
  return out;
}

struct hazard_event
{
  net_id net;
  int64_t stage{ 0 };
  std::string detail;
};

struct sim_result
{
  std::vector<std::vector<bool>> outputs; // per input vector, per PO
  std::vector<hazard_event> hazards;
  std::vector<int64_t> po_release; // stage at which each PO's value is released (first vector)
};

/*! \brief Event-driven pulse simulation in increasing stage order.
 *
 * Vectors stream pipelined one clock period apart: vector j's PI pulses
 * enter at stage j*n and every clocked element fires once per vector at
 * its own stage plus j*n. Hazards (two pulses in one consumption window,
 * or same-stage T1 input pulses) are reported; outputs are still
 * produced by treating coincident pulses as one.
 */
inline sim_result simulate( balanced_design const& design,
                            std::vector<std::vector<bool>> const& vectors )
{
  netlist const& net = design.net;
  int64_t const n = design.stages.phases;
  int64_t const m = static_cast<int64_t>( vectors.size() );
  sim_result res;
  res.outputs.assign( vectors.size(), std::vector<bool>( net.pos().size(), false ) );

  auto key = []( uint32_t node, t1_output pin ) {
    return static_cast<size_t>( node ) * t1_output_count + static_cast<size_t>( pin );
  };
  std::vector<std::vector<int64_t>> pulses( net.size() * t1_output_count );
  for ( size_t i = 0; i < net.pis().size(); ++i )
  {
    auto& p = pulses[key( net.pis()[i], t1_output::sum )];
    for ( int64_t j = 0; j < m; ++j )
    {
      if ( vectors[static_cast<size_t>( j )].at( i ) )
      {
        p.push_back( j * n );
      }
    }
  }

  // pulses on a net inside the window [t-n, t-1]
  struct window_view
  {
    int count;
    int64_t first;
  };
  auto window = [&]( uint32_t node, t1_output pin, int64_t t ) {
    auto const& p = pulses[key( node, pin )];
    auto const lo = std::lower_bound( p.begin(), p.end(), t - n );
    auto const hi = std::lower_bound( lo, p.end(), t );
    return window_view{ static_cast<int>( hi - lo ), lo == hi ? int64_t{ 0 } : *lo };
  };

  // firings ordered by (stage, topological rank) across all vectors
  struct firing
  {
    int64_t t;
    uint32_t rank;
    uint32_t node;
    int64_t vec;
  };
  std::vector<firing> firings;
  auto const& topo = net.topo_order();
  for ( uint32_t r = 0; r < topo.size(); ++r )
  {
    uint32_t const id = topo[r];
    if ( !gate_is_clocked( net.kind_of( id ) ) )
    {
      continue;
    }
    int64_t const s = design.stages.sigma.at( id );
    for ( int64_t j = 0; j < m; ++j )
    {
      firings.push_back( firing{ s + j * n, r, id, j } );
    }
  }
  std::sort( firings.begin(), firings.end(), []( firing const& a, firing const& b ) {
    return std::tie( a.t, a.rank, a.vec ) < std::tie( b.t, b.rank, b.vec );
  } );

  for ( auto const& fire : firings )
  {
    auto const& g = net.node_at( fire.node );
    if ( g.kind == gate_kind::t1 )
    {
      std::array<bool, 3> present{};
      std::array<int64_t, 3> when{};
      for ( int k = 0; k < 3; ++k )
      {
        auto const& f = g.fanins[k];
        auto const in = window( f.node, f.pin, fire.t );
        if ( in.count > 1 )
        {
          res.hazards.push_back( hazard_event{ net_id{ f.node, f.pin }, fire.t,
                                               "multiple pulses in one T1 input window" } );
        }
        bool v = in.count > 0;
        if ( f.complemented )
        {
          v = !v; // cell-internal input inverter, stage-transparent
        }
        present[k] = v;
        when[k] = in.count > 0 ? in.first : fire.t - n + k;
      }
      for ( int a = 0; a < 3; ++a )
      {
        for ( int b = a + 1; b < 3; ++b )
        {
          if ( present[a] && present[b] && when[a] == when[b] )
          {
            res.hazards.push_back( hazard_event{ net_id{ fire.node, t1_output::sum }, when[a],
                                                 "simultaneous T1 input pulses" } );
            present[b] = false; // coincident pulses collapse into one
          }
        }
      }
      std::array<std::pair<int64_t, bool>, 3> order{ { { when[0], present[0] },
                                                       { when[1], present[1] },
                                                       { when[2], present[2] } } };
      std::sort( order.begin(), order.end() );
      t1_state st;
      bool q = false, c = false;
      for ( auto const& [stage, p] : order )
      {
        (void)stage;
        if ( !p )
        {
          continue;
        }
        auto const e = t1_pulse_step( st, t1_input_kind::toggle );
        q |= e.q_star;
        c |= e.c_star;
      }
      bool const s = t1_pulse_step( st, t1_input_kind::reset ).s;
      auto emit = [&]( t1_output pin, bool v ) {
        if ( v )
        {
          pulses[key( fire.node, pin )].push_back( fire.t );
        }
      };
      emit( t1_output::sum, s );
      emit( t1_output::carry, c );
      emit( t1_output::orq, q );
      emit( t1_output::ncarry, !c );
      emit( t1_output::norq, !q );
    }
    else
    {
      std::vector<uint8_t> ins;
      for ( auto const& f : g.fanins )
      {
        auto const in = window( f.node, f.pin, fire.t );
        if ( in.count > 1 )
        {
          res.hazards.push_back( hazard_event{ net_id{ f.node, f.pin }, fire.t,
                                               "multiple pulses in one consumption window" } );
        }
        uint8_t v = in.count > 0 ? 1 : 0;
        if ( f.complemented )
        {
          v ^= 1;
        }
        ins.push_back( v );
      }
      uint8_t v = 0;
      switch ( g.kind )
      {
      case gate_kind::and2:
        v = ins[0] & ins[1];
        break;
      case gate_kind::or2:
        v = ins[0] | ins[1];
        break;
      case gate_kind::xor2:
        v = ins[0] ^ ins[1];
        break;
      case gate_kind::inv:
        v = ins[0] ^ 1;
        break;
      case gate_kind::buf:
      case gate_kind::dff:
        v = ins[0];
        break;
      case gate_kind::maj3:
        v = static_cast<uint8_t>( ( ins[0] & ins[1] ) | ( ins[0] & ins[2] ) |
                                  ( ins[1] & ins[2] ) );
        break;
      default:
        throw std::logic_error( "simulate: unexpected clocked kind" );
      }
      if ( v )
      {
        pulses[key( fire.node, t1_output::sum )].push_back( fire.t );
      }
    }
  }

  res.po_release.assign( net.pos().size(), 0 );
  for ( size_t k = 0; k < net.pos().size(); ++k )
  {
    auto const& f = net.node_at( net.pos()[k] ).fanins[0];
    int64_t const r = design.stages.has_stage( f.node ) ? design.stages.sigma[f.node] : 0;
    res.po_release[k] = r;
    auto const& p = pulses[key( f.node, f.pin )];
    for ( int64_t j = 0; j < m; ++j )
    {
      bool v = std::binary_search( p.begin(), p.end(), r + j * n );
      if ( f.complemented )
      {
        v = !v;
      }
      res.outputs[static_cast<size_t>( j )][k] = v;
    }
  }
  return res;
}

struct equivalence_mode
{
  bool exhaustive{ true };
  uint64_t random_count{ 100'000 };
  uint64_t seed{ 1 };

  static equivalence_mode exhaustive_mode() { return equivalence_mode{ true, 0, 0 }; }
  static equivalence_mode random( uint64_t count, uint64_t seed )
  {
    return equivalence_mode{ false, count, seed };
  }
};

struct equivalence_verdict
{
  bool equal{ false };
  bool has_counterexample{ false };
  std::vector<bool> counterexample;
  uint64_t vectors_checked{ 0 };
};

/*! \brief Compares a reference netlist against a mapped design.
 *
 * The reference is evaluated word-parallel; the design runs through the
 * pulse simulator. Exhaustive mode covers up to 20 PIs.
 */
inline equivalence_verdict check_equivalence( netlist const& ref, balanced_design const& design,
                                              equivalence_mode mode = {} )
{
  if ( ref.pis().size() != design.net.pis().size() ||
       ref.pos().size() != design.net.pos().size() )
  {
    throw std::invalid_argument( "check_equivalence: PI/PO interface mismatch" );
  }
  size_t const num_pi = ref.pis().size();
  if ( mode.exhaustive && num_pi > 20 )
  {
    throw std::invalid_argument( "check_equivalence: exhaustive limited to 20 PIs" );
  }

  equivalence_verdict verdict;
  verdict.equal = true;

  std::mt19937_64 rng( mode.seed );
  uint64_t const total = mode.exhaustive ? ( uint64_t{ 1 } << num_pi ) : mode.random_count;
  size_t const batch_size = 256;

  for ( uint64_t base = 0; base < total && verdict.equal; base += batch_size )
  {
    size_t const count = static_cast<size_t>( std::min<uint64_t>( batch_size, total - base ) );
    std::vector<std::vector<bool>> vectors( count, std::vector<bool>( num_pi, false ) );
    for ( size_t v = 0; v < count; ++v )
    {
      if ( mode.exhaustive )
      {
        uint64_t const bits = base + v;
        for ( size_t i = 0; i < num_pi; ++i )
        {
          vectors[v][i] = ( bits >> i ) & 1u;
        }
      }
      else
      {
        for ( size_t i = 0; i < num_pi; ++i )
        {
          vectors[v][i] = ( rng() & 1u ) != 0;
        }
      }
    }

    auto const sim = simulate( design, vectors );
    for ( size_t v = 0; v < count; ++v )
    {
      auto const expect = ref.eval( vectors[v] );
      ++verdict.vectors_checked;
      if ( expect != sim.outputs[v] )
      {
        verdict.equal = false;
        verdict.has_counterexample = true;
        verdict.counterexample = vectors[v];
        break;
      }
    }
  }
  return verdict;
}

enum class violation_kind : uint8_t
{
  gap,
  t1_separation,
  ordering,
  hazard,
  stage_arithmetic
};

inline constexpr std::array<std::string_view, 5> violation_kind_names = {
    "gap", "t1-separation", "ordering", "hazard", "stage-arithmetic" };

struct validation_report
{
  struct violation
  {
    violation_kind kind;
    uint32_t location; // node id
    std::string details;
  };
  std::vector<violation> violations;

  bool ok() const { return violations.empty(); }
};

/*! \brief Structural timing checks on a balanced design.
 *
 * Verifies fanin ordering, the [1, n] window between consecutive clocked
 * elements, Eq. (3) and distinct release stages at every T1, and the
 * sigma = n*S + phi identity when stored phase/epoch values are present.
 * Violations are data, not errors.
 */
inline validation_report validate_schedule( balanced_design const& design, uint32_t n )
{
  validation_report rep;
  netlist const& net = design.net;
  auto stage = [&]( uint32_t id ) -> int64_t {
    return design.stages.has_stage( id ) ? design.stages.sigma[id] : 0;
  };
  auto add = [&]( violation_kind k, uint32_t where, std::string d ) {
    rep.violations.push_back( validation_report::violation{ k, where, std::move( d ) } );
  };

  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    if ( !gate_is_clocked( g.kind ) )
    {
      continue;
    }
    if ( !design.stages.has_stage( id ) )
    {
      add( violation_kind::ordering, id, "clocked element without a stage" );
      continue;
    }
    int64_t const sv = stage( id );
    for ( auto const& f : g.fanins )
    {
      int64_t const su = stage( f.node );
      int64_t const d = sv - su;
      if ( d < 1 )
      {
        add( violation_kind::ordering, id,
             "fanin " + std::to_string( f.node ) + " released at stage " + std::to_string( su ) +
                 ", consumed at " + std::to_string( sv ) );
      }
      else if ( d > static_cast<int64_t>( n ) )
      {
        add( violation_kind::gap, id,
             "window exceeded: gap " + std::to_string( d ) + " > " + std::to_string( n ) );
      }
    }
    if ( g.kind == gate_kind::t1 )
    {
      std::array<int64_t, 3> rel{ stage( g.fanins[0].node ), stage( g.fanins[1].node ),
                                  stage( g.fanins[2].node ) };
      std::sort( rel.begin(), rel.end() );
      if ( rel[0] == rel[1] || rel[1] == rel[2] )
      {
        add( violation_kind::t1_separation, id, "equal release stages at a T1" );
      }
      if ( sv < std::max( { rel[0] + 3, rel[1] + 2, rel[2] + 1 } ) )
      {
        add( violation_kind::t1_separation, id, "stage below the Eq. (3) bound" );
      }
    }
  }

  if ( !design.stages.stored_phi.empty() || !design.stages.stored_epoch.empty() )
  {
    for ( uint32_t id = 0; id < net.size(); ++id )
    {
      if ( net.is_dead( id ) || !design.stages.has_stage( id ) )
      {
        continue;
      }
      int64_t const s = design.stages.sigma[id];
      if ( id < design.stages.stored_phi.size() && design.stages.stored_phi[id] >= 0 &&
           design.stages.stored_phi[id] != s % n )
      {
        add( violation_kind::stage_arithmetic, id, "stored phase disagrees with sigma mod n" );
      }
      if ( id < design.stages.stored_epoch.size() && design.stages.stored_epoch[id] >= 0 &&
           design.stages.stored_epoch[id] != s / n )
      {
        add( violation_kind::stage_arithmetic, id, "stored epoch disagrees with sigma div n" );
      }
    }
  }
  return rep;
}

} // namespace sfqmap
