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

#include <catch_amalgamated.hpp>

#include <sfqmap/generators.hpp>
#include <sfqmap/pipeline.hpp>
#include <sfqmap/verify.hpp>

#include "test_util.hpp"

using namespace sfqmap;

namespace
{

/* hand-built T1 full adder design with valid stages */
balanced_design t1_fa_design( bool swap_sum_carry = false )
{
  balanced_design d;
  uint32_t const a = d.net.add_pi(), b = d.net.add_pi(), c = d.net.add_pi();
  uint32_t const da = d.net.add_gate( gate_kind::dff, { signal( a ) } );
  uint32_t const db = d.net.add_gate( gate_kind::dff, { signal( b ) } );
  uint32_t const t =
      d.net.add_gate( gate_kind::t1, { signal( da ), signal( db ), signal( c ) } );
  d.net.add_po( signal( t, false, swap_sum_carry ? t1_output::carry : t1_output::sum ) );
  d.net.add_po( signal( t, false, swap_sum_carry ? t1_output::sum : t1_output::carry ) );
  d.stages.phases = 4;
  d.stages.sigma.assign( d.net.size(), -1 );
  d.stages.sigma[da] = 1;
  d.stages.sigma[db] = 2;
  d.stages.sigma[t] = 4;
  return d;
}

netlist fa_reference()
{
  netlist net;
  uint32_t const a = net.add_pi(), b = net.add_pi(), c = net.add_pi();
  uint32_t const x0 = net.add_gate( gate_kind::xor2, { signal( a ), signal( b ) } );
  uint32_t const s = net.add_gate( gate_kind::xor2, { signal( x0 ), signal( c ) } );
  uint32_t const m = net.add_gate( gate_kind::maj3, { signal( a ), signal( b ), signal( c ) } );
  net.add_po( signal( s ) );
  net.add_po( signal( m ) );
  return net;
}

} // namespace

TEST_CASE( "t1_pulse_step transitions", "[verify]" )
{
  t1_state st;
  SECTION( "first toggle emits Q*" )
  {
    auto const e = t1_pulse_step( st, t1_input_kind::toggle );
    CHECK( e.q_star );
    CHECK( !e.c_star );
    CHECK( !e.s );
    CHECK( st.loop );
  }
  SECTION( "second toggle emits C* and clears" )
  {
    t1_pulse_step( st, t1_input_kind::toggle );
    auto const e = t1_pulse_step( st, t1_input_kind::toggle );
    CHECK( e.c_star );
    CHECK( !st.loop );
  }
  SECTION( "reset in state 1 emits S" )
  {
    t1_pulse_step( st, t1_input_kind::toggle );
    auto const e = t1_pulse_step( st, t1_input_kind::reset );
    CHECK( e.s );
    CHECK( !st.loop );
  }
  SECTION( "reset in state 0 is absorbed" )
  {
    auto const e = t1_pulse_step( st, t1_input_kind::reset );
    CHECK( !e.s );
    CHECK( !e.q_star );
    CHECK( !st.loop );
  }
}

TEST_CASE( "t1_truth equals (XOR3, MAJ3, OR3) for every arrival order", "[verify]" )
{
  std::array<std::array<int64_t, 3>, 6> const orders{ { { 1, 2, 3 },
                                                        { 1, 3, 2 },
                                                        { 2, 1, 3 },
                                                        { 2, 3, 1 },
                                                        { 3, 1, 2 },
                                                        { 3, 2, 1 } } };
  for ( uint8_t m = 0; m < 8; ++m )
  {
    std::array<bool, 3> const in{ ( m & 1 ) != 0, ( m & 2 ) != 0, ( m & 4 ) != 0 };
    bool const xor3 = in[0] ^ in[1] ^ in[2];
    bool const maj3 = ( in[0] && in[1] ) || ( in[0] && in[2] ) || ( in[1] && in[2] );
    bool const or3 = in[0] || in[1] || in[2];
    for ( auto const& order : orders )
    {
      auto const r = t1_truth( in, order, 4 );
      CHECK( r.sum == xor3 );
      CHECK( r.carry == maj3 );
      CHECK( r.orq == or3 );
    }
  }
  CHECK_THROWS_AS( t1_truth( { true, true, false }, { 1, 1, 2 }, 4 ), std::invalid_argument );
  CHECK_THROWS_AS( t1_truth( { true, true, false }, { 1, 2, 4 }, 4 ), std::invalid_argument );
}

TEST_CASE( "simulate a full-adder T1 design", "[verify]" )
{
  auto const d = t1_fa_design();
  SECTION( "single vectors" )
  {
    auto const r = simulate( d, { { true, false, true } } );
    REQUIRE( r.hazards.empty() );
    CHECK( r.outputs[0] == std::vector<bool>{ false, true } ); // sum 0, carry 1
    auto const zero = simulate( d, { { false, false, false } } );
    CHECK( zero.outputs[0] == std::vector<bool>{ false, false } );
  }
  SECTION( "all eight vectors match the Boolean reference" )
  {
    auto const ref = fa_reference();
    for ( uint8_t m = 0; m < 8; ++m )
    {
      std::vector<bool> const in{ ( m & 1 ) != 0, ( m & 2 ) != 0, ( m & 4 ) != 0 };
      auto const r = simulate( d, { in } );
      CHECK( r.hazards.empty() );
      CHECK( r.outputs[0] == ref.eval( in ) );
    }
  }
  SECTION( "pipelined streaming equals independent runs" )
  {
    std::mt19937 rng( 3 );
    std::vector<std::vector<bool>> vectors;
    for ( int j = 0; j < 16; ++j )
    {
      vectors.push_back( { ( rng() & 1 ) != 0, ( rng() & 1 ) != 0, ( rng() & 1 ) != 0 } );
    }
    auto const streamed = simulate( d, vectors );
    REQUIRE( streamed.hazards.empty() );
    for ( size_t j = 0; j < vectors.size(); ++j )
    {
      auto const solo = simulate( d, { vectors[j] } );
      CHECK( streamed.outputs[j] == solo.outputs[0] );
    }
  }
  SECTION( "corrupted separation stages raise a hazard" )
  {
    auto bad = t1_fa_design();
    // both DFF releases at the same stage
    for ( uint32_t id = 0; id < bad.net.size(); ++id )
    {
      if ( bad.net.kind_of( id ) == gate_kind::dff )
      {
        bad.stages.sigma[id] = 2;
      }
    }
    CHECK( !validate_schedule( bad, 4 ).ok() );
    auto const r = simulate( bad, { { true, true, false } } );
    CHECK( !r.hazards.empty() );
  }
}

TEST_CASE( "check_equivalence", "[verify]" )
{
  SECTION( "a design equals its own reference" )
  {
    auto const d = t1_fa_design();
    auto const ref = fa_reference();
    auto const v = check_equivalence( ref, d, equivalence_mode::exhaustive_mode() );
    CHECK( v.equal );
    CHECK( v.vectors_checked == 8 );
  }
  SECTION( "swapped outputs produce a counterexample" )
  {
    auto const d = t1_fa_design( /*swap_sum_carry=*/true );
    auto const ref = fa_reference();
    auto const v = check_equivalence( ref, d, equivalence_mode::exhaustive_mode() );
    CHECK( !v.equal );
    REQUIRE( v.has_counterexample );
    // XOR3 and MAJ3 differ on the counterexample
    int const ones = static_cast<int>( v.counterexample[0] ) +
                     static_cast<int>( v.counterexample[1] ) +
                     static_cast<int>( v.counterexample[2] );
    CHECK( ( ones == 1 || ones == 2 ) );
  }
  SECTION( "interface mismatch is rejected" )
  {
    auto const d = t1_fa_design();
    netlist two_pi;
    two_pi.add_po( signal( two_pi.add_gate(
        gate_kind::and2, { signal( two_pi.add_pi() ), signal( two_pi.add_pi() ) } ) ) );
    CHECK_THROWS_AS( check_equivalence( two_pi, d, equivalence_mode::exhaustive_mode() ),
                     std::invalid_argument );
  }
  SECTION( "random mode is seeded and deterministic" )
  {
    auto const d = t1_fa_design();
    auto const ref = fa_reference();
    auto const a = check_equivalence( ref, d, equivalence_mode::random( 500, 42 ) );
    auto const b = check_equivalence( ref, d, equivalence_mode::random( 500, 42 ) );
    CHECK( a.equal );
    CHECK( a.vectors_checked == b.vectors_checked );
  }
}

TEST_CASE( "validate_schedule violations", "[verify]" )
{
  SECTION( "gap violation" )
  {
    balanced_design d;
    uint32_t const a = d.net.add_pi();
    uint32_t const g = d.net.add_gate( gate_kind::inv, { signal( a ) } );
    d.net.add_po( signal( g ) );
    d.stages.phases = 4;
    d.stages.sigma.assign( d.net.size(), -1 );
    d.stages.sigma[g] = 5; // n + 1 with no DFF
    auto const rep = validate_schedule( d, 4 );
    REQUIRE( rep.violations.size() == 1 );
    CHECK( rep.violations[0].kind == violation_kind::gap );
  }
  SECTION( "ordering violation" )
  {
    balanced_design d;
    uint32_t const a = d.net.add_pi();
    uint32_t const g1 = d.net.add_gate( gate_kind::inv, { signal( a ) } );
    uint32_t const g2 = d.net.add_gate( gate_kind::inv, { signal( g1 ) } );
    d.net.add_po( signal( g2 ) );
    d.stages.phases = 4;
    d.stages.sigma.assign( d.net.size(), -1 );
    d.stages.sigma[g1] = 2;
    d.stages.sigma[g2] = 2;
    auto const rep = validate_schedule( d, 4 );
    REQUIRE( !rep.ok() );
    CHECK( rep.violations[0].kind == violation_kind::ordering );
  }
  SECTION( "equal release stages at a T1" )
  {
    auto bad = t1_fa_design();
    for ( uint32_t id = 0; id < bad.net.size(); ++id )
    {
      if ( bad.net.kind_of( id ) == gate_kind::dff )
      {
        bad.stages.sigma[id] = 1;
      }
    }
    auto const rep = validate_schedule( bad, 4 );
    REQUIRE( !rep.ok() );
    bool has_sep = false;
    for ( auto const& v : rep.violations )
    {
      has_sep |= v.kind == violation_kind::t1_separation;
    }
    CHECK( has_sep );
  }
  SECTION( "stored phase/epoch must satisfy the stage identity" )
  {
    auto d = t1_fa_design();
    d.stages.stored_phi.assign( d.net.size(), -1 );
    d.stages.stored_epoch.assign( d.net.size(), -1 );
    for ( uint32_t id = 0; id < d.net.size(); ++id )
    {
      if ( d.stages.has_stage( id ) )
      {
        d.stages.stored_phi[id] = d.stages.sigma[id] % 4;
        d.stages.stored_epoch[id] = d.stages.sigma[id] / 4;
      }
    }
    CHECK( validate_schedule( d, 4 ).ok() );
    d.stages.stored_phi[d.net.size() - 3] = 3; // falsify one entry
    CHECK( !validate_schedule( d, 4 ).ok() );
  }
}

TEST_CASE( "hazard completeness on mutated designs", "[verify]" )
{
  // force two same-stage releases on a mapped adder and require either a
  // hazard flag or an output mismatch under exhaustive simulation
  run_config cfg;
  cfg.input_path = "gen:adder:2";
  cfg.mode = run_mode::multiphase_t1;
  cfg.phases = 4;
  cfg.ilp_timeout_ms = 200;
  cfg.csp_timeout_ms = 200;
  auto const r = run_pipeline( cfg );
  REQUIRE( r.status == pipeline_status::ok );

  auto mutated = r.design;
  // find a T1 and equalize two of its fanin release stages
  bool found = false;
  for ( uint32_t id = 0; id < mutated.net.size() && !found; ++id )
  {
    if ( mutated.net.kind_of( id ) != gate_kind::t1 )
    {
      continue;
    }
    auto const& g = mutated.net.node_at( id );
    for ( int x = 0; x < 3 && !found; ++x )
    {
      for ( int y = 0; y < 3 && !found; ++y )
      {
        uint32_t const fx = g.fanins[static_cast<size_t>( x )].node;
        uint32_t const fy = g.fanins[static_cast<size_t>( y )].node;
        if ( x == y || !mutated.stages.has_stage( fx ) )
        {
          continue;
        }
        int64_t const other =
            mutated.stages.has_stage( fy ) ? mutated.stages.sigma[fy] : 0;
        mutated.stages.sigma[fx] = other;
        found = true;
      }
    }
  }
  REQUIRE( found );
  CHECK( !validate_schedule( mutated, 4 ).ok() );

  auto const ref = gen_ripple_adder( 2 );
  bool hazard_or_mismatch = false;
  for ( uint32_t m = 0; m < 32 && !hazard_or_mismatch; ++m )
  {
    std::vector<bool> in;
    for ( int i = 0; i < 5; ++i )
    {
      in.push_back( ( m >> i ) & 1 );
    }
    auto const sim = simulate( mutated, { in } );
    hazard_or_mismatch = !sim.hazards.empty() || sim.outputs[0] != ref.eval( in );
  }
  CHECK( hazard_or_mismatch );
}
