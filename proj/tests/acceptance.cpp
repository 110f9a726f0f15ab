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
  \file acceptance.cpp
  \brief Integration gate: one pass/fail line per criterion

  Runs the whole battery of functional, optimality and directional checks
  at fixed tolerances and deterministic seeds. Exit code is the number of
  failing criteria.
*/

#include <sfqmap/pipeline.hpp>

#include "test_util.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sfqmap;

namespace
{

struct criterion_result
{
  bool pass{ false };
  std::string note;
};

int failures = 0;

void run_criterion( int number, std::string const& name,
                    std::function<criterion_result()> const& body )
{
  auto const start = std::chrono::steady_clock::now();
  criterion_result r;
  try
  {
    r = body();
  }
  catch ( std::exception const& e )
  {
    r.pass = false;
    r.note = std::string( "exception: " ) + e.what();
  }
  auto const sec = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  std::printf( "%s  criterion %d: %-28s (%.2f s)%s%s\n", r.pass ? "PASS" : "FAIL", number,
               name.c_str(), sec, r.note.empty() ? "" : " - ", r.note.c_str() );
  std::fflush( stdout );
  if ( !r.pass )
  {
    ++failures;
  }
}

bool family_value( t1_output role, uint8_t minterm, uint8_t polarity, bool oc )
{
  bool const a = ( ( minterm ^ polarity ) >> 0 ) & 1;
  bool const b = ( ( minterm ^ polarity ) >> 1 ) & 1;
  bool const c = ( ( minterm ^ polarity ) >> 2 ) & 1;
  bool v = false;
  switch ( role )
  {
  case t1_output::sum:
    v = a ^ b ^ c;
    break;
  case t1_output::carry:
    v = ( a && b ) || ( a && c ) || ( b && c );
    break;
  case t1_output::orq:
    v = a || b || c;
    break;
  case t1_output::ncarry:
    v = !( ( a && b ) || ( a && c ) || ( b && c ) );
    break;
  case t1_output::norq:
    v = !( a || b || c );
    break;
  }
  return v ^ oc;
}

/* criterion 1: family matcher vs full enumeration */
criterion_result family_oracle()
{
  std::array<uint8_t, 5> const positive{ 0x96, 0xe8, 0xfe, 0x17, 0x01 };
  for ( size_t r = 0; r < positive.size(); ++r )
  {
    if ( t1_output_function( static_cast<t1_output>( r ) ) != positive[r] )
    {
      return { false, "family table mismatch under positive polarity" };
    }
  }
  for ( uint32_t tt = 0; tt < 256; ++tt )
  {
    size_t expected = 0;
    bool const support = tt3_full_support( static_cast<uint8_t>( tt ) );
    std::vector<std::tuple<uint8_t, int, bool>> want;
    if ( support )
    {
      for ( uint8_t pol = 0; pol < 8; ++pol )
      {
        for ( uint8_t r = 0; r < t1_output_count; ++r )
        {
          for ( bool oc : { false, true } )
          {
            if ( oc && static_cast<t1_output>( r ) != t1_output::sum )
            {
              continue;
            }
            bool equal = true;
            for ( uint8_t m = 0; m < 8 && equal; ++m )
            {
              equal = family_value( static_cast<t1_output>( r ), m, pol, oc ) ==
                      ( ( ( tt >> m ) & 1 ) != 0 );
            }
            if ( equal )
            {
              ++expected;
              want.emplace_back( pol, r, oc );
            }
          }
        }
      }
    }
    auto const got = match_t1_family( static_cast<uint8_t>( tt ) );
    if ( got.size() != expected )
    {
      return { false, "count mismatch at tt " + std::to_string( tt ) };
    }
    for ( auto const& m : got )
    {
      if ( std::find( want.begin(), want.end(),
                      std::tuple( m.polarity, static_cast<int>( m.role ),
                                  m.output_complement ) ) == want.end() )
      {
        return { false, "spurious match at tt " + std::to_string( tt ) };
      }
    }
  }
  return { true, "256 functions x 8 polarities" };
}

/* criterion 2: pulse model equals the Boolean readout on all 48 cases */
criterion_result pulse_boolean_agreement()
{
  std::array<std::array<int64_t, 3>, 6> const orders{ { { 1, 2, 3 },
                                                        { 1, 3, 2 },
                                                        { 2, 1, 3 },
                                                        { 2, 3, 1 },
                                                        { 3, 1, 2 },
                                                        { 3, 2, 1 } } };
  int cases = 0;
  for ( uint8_t m = 0; m < 8; ++m )
  {
    std::array<bool, 3> const in{ ( m & 1 ) != 0, ( m & 2 ) != 0, ( m & 4 ) != 0 };
    for ( auto const& order : orders )
    {
      auto const r = t1_truth( in, order, 5 );
      bool const xor3 = in[0] ^ in[1] ^ in[2];
      bool const maj3 = ( in[0] && in[1] ) || ( in[0] && in[2] ) || ( in[1] && in[2] );
      bool const or3 = in[0] || in[1] || in[2];
      if ( r.sum != xor3 || r.carry != maj3 || r.orq != or3 )
      {
        return { false, "disagreement at minterm " + std::to_string( m ) };
      }
      ++cases;
    }
  }
  return { cases == 48, std::to_string( cases ) + " cases" };
}

/* criterion 3: equation arithmetic on random tuples */
criterion_result equation_suites()
{
  std::mt19937 rng( 1234 );
  for ( int i = 0; i < 1000; ++i )
  {
    uint32_t const n = 1 + rng() % 8;
    int64_t const epoch = rng() % 4096;
    int64_t const phase = rng() % n;
    if ( stage_of( n, epoch, phase ) != static_cast<int64_t>( n ) * epoch + phase )
    {
      return { false, "stage arithmetic" };
    }
  }
  for ( int i = 0; i < 1000; ++i )
  {
    uint32_t const n = 1 + rng() % 6;
    int64_t const d = 1 + rng() % 64;
    int64_t m = 0;
    while ( ( m + 1 ) * static_cast<int64_t>( n ) < d )
    {
      ++m;
    }
    if ( edge_dff_bound( d, n ) != m )
    {
      return { false, "edge bound" };
    }
  }
  for ( int i = 0; i < 1000; ++i )
  {
    uint32_t const n = 1 + rng() % 6;
    std::array<int64_t, 3> s{ static_cast<int64_t>( rng() % 24 ),
                              static_cast<int64_t>( rng() % 24 ),
                              static_cast<int64_t>( rng() % 24 ) };
    std::sort( s.begin(), s.end() );
    int64_t const bound = std::max( { s[0] + 3, s[1] + 2, s[2] + 1 } );
    int64_t const t = bound + rng() % 6;
    // Eq. (3) must hold exactly at the bound and fail below it
    bool ok = t >= bound;
    try
    {
      int const cost = t1_separation_cost( s, t, n );
      int const direct = ( ( s[0] % n == s[1] % n && t - s[0] <= n ) ? 1 : 0 ) +
                         ( ( s[1] % n == s[2] % n && t - s[1] <= n ) ? 1 : 0 );
      ok = ok && cost == direct;
    }
    catch ( ... )
    {
      ok = false;
    }
    if ( !ok )
    {
      return { false, "separation cost" };
    }
    try
    {
      t1_separation_cost( s, bound - 1, n );
      return { false, "Eq. (3) precondition not enforced" };
    }
    catch ( std::invalid_argument const& )
    {
    }
  }
  return { true, "3000 random tuples" };
}

/* criterion 4: solver vs complete enumeration on desk-scale models */
criterion_result ilp_optimality()
{
  std::mt19937 rng( 4242 );
  int checked = 0;
  while ( checked < 200 )
  {
    std::array<uint32_t, 3> const ns{ 1, 2, 4 };
    uint32_t const n = ns[rng() % 3];
    uint32_t const gates = n == 4 ? 7 : 8;
    auto const net = test_util::random_staged_netlist( rng, 3, gates, 3, n >= 3 );
    auto m = build_ilp( net, n );
    if ( m.clocked.empty() || m.clocked.size() > 8 )
    {
      continue;
    }
    m.sigma_upper = std::min<int64_t>( m.sigma_upper, 3 * static_cast<int64_t>( n ) );
    bool feasible = true;
    for ( uint32_t g : m.clocked )
    {
      feasible &= m.lower[g] <= m.sigma_upper;
    }
    if ( !feasible )
    {
      continue;
    }
    ++checked;
    auto const sol = solve_stages( m );
    if ( !sol.optimal )
    {
      return { false, "solver gave up on instance " + std::to_string( checked ) };
    }
    int64_t const oracle = test_util::enumerate_stage_minimum( m );
    if ( sol.objective != oracle )
    {
      return { false, "objective " + std::to_string( sol.objective ) + " vs oracle " +
                          std::to_string( oracle ) };
    }
    if ( m.evaluate( sol ) != sol.objective || !m.feasible( sol ) )
    {
      return { false, "self-consistency" };
    }
  }
  return { true, "200 instances, n in {1,2,4}" };
}

/* criterion 5: insertion minimality vs brute force, bounded by greedy */
criterion_result csp_exactness()
{
  auto const costs = cost_table::defaults();
  std::mt19937 rng( 777 );
  int checked = 0;
  while ( checked < 200 )
  {
    std::array<uint32_t, 3> const ns{ 1, 2, 4 };
    uint32_t const n = ns[rng() % 3];
    auto const net = test_util::random_staged_netlist( rng, 3, 6, 3, n >= 3 );
    ilp_model m;
    try
    {
      m = build_ilp( net, n );
    }
    catch ( std::invalid_argument const& )
    {
      continue;
    }
    if ( m.clocked.empty() || m.clocked.size() > 7 )
    {
      continue;
    }
    m.sigma_upper = std::min<int64_t>( m.sigma_upper, 3 * static_cast<int64_t>( n ) );
    bool ok = true;
    for ( uint32_t g : m.clocked )
    {
      ok &= m.lower[g] <= m.sigma_upper;
    }
    if ( !ok )
    {
      continue;
    }
    auto const st = solve_stages( m );
    auto const model = build_csp( net, st );
    bool desk_scale = true;
    for ( auto const& tree : model.trees )
    {
      desk_scale &= tree.sinks.size() <= 4;
      for ( auto const& sink : tree.sinks )
      {
        desk_scale &= sink.sigma_v - tree.sigma_u <= 3 * static_cast<int64_t>( n );
      }
    }
    if ( !desk_scale )
    {
      continue;
    }
    ++checked;
    auto const design = solve_balancing( net, st, model, costs );
    if ( !design.optimal )
    {
      return { false, "solver gave up on instance " + std::to_string( checked ) };
    }
    int64_t const oracle = test_util::enumerate_balancing_minimum( model );
    if ( design.metrics.dff_count != oracle )
    {
      return { false, "count " + std::to_string( design.metrics.dff_count ) + " vs oracle " +
                          std::to_string( oracle ) };
    }
    auto const greedy = greedy_baseline( net, st, costs );
    if ( design.metrics.dff_count > greedy.metrics.dff_count )
    {
      return { false, "optimal exceeded the greedy baseline" };
    }
    if ( !validate_schedule( design, n ).ok() || !validate_schedule( greedy, n ).ok() )
    {
      return { false, "illegal placement" };
    }
  }
  return { true, "200 instances vs brute force and greedy" };
}

/* criterion 6: adders and random nets through the whole flow */
criterion_result end_to_end_equivalence()
{
  for ( uint32_t bits = 1; bits <= 16; ++bits )
  {
    run_config cfg;
    cfg.input_path = "gen:adder:" + std::to_string( bits );
    cfg.mode = run_mode::multiphase_t1;
    cfg.phases = 4;
    cfg.ilp_timeout_ms = 150;
    cfg.csp_timeout_ms = 150;
    cfg.seed = 99;
    cfg.verify = 2 * bits + 1 <= 20 ? "exhaustive" : "random:100000";
    auto const r = run_pipeline( cfg );
    if ( r.status != pipeline_status::ok )
    {
      return { false, "adder " + std::to_string( bits ) + ": " + r.message };
    }
    if ( !r.validation.ok() || !r.equivalence.equal )
    {
      return { false, "adder " + std::to_string( bits ) + " failed verification" };
    }
    // pipelined random stream: no hazards, outputs equal the solo runs
    std::mt19937 stream_rng( 1000 + bits );
    std::vector<std::vector<bool>> stream;
    for ( int j = 0; j < 32; ++j )
    {
      std::vector<bool> v;
      for ( uint32_t i = 0; i < 2 * bits + 1; ++i )
      {
        v.push_back( ( stream_rng() & 1 ) != 0 );
      }
      stream.push_back( std::move( v ) );
    }
    auto const piped = simulate( r.design, stream );
    if ( !piped.hazards.empty() )
    {
      return { false, "hazards on adder " + std::to_string( bits ) };
    }
    for ( size_t j = 0; j < stream.size(); ++j )
    {
      if ( simulate( r.design, { stream[j] } ).outputs[0] != piped.outputs[j] )
      {
        return { false, "streaming mismatch on adder " + std::to_string( bits ) };
      }
    }
  }
  std::mt19937 rng( 2026 );
  for ( int i = 0; i < 50; ++i )
  {
    auto const net = test_util::random_netlist( rng, 4 + rng() % 5, 10 + rng() % 25 );
    run_config cfg;
    cfg.mode = run_mode::multiphase_t1;
    cfg.phases = 4;
    cfg.ilp_timeout_ms = 150;
    cfg.csp_timeout_ms = 150;
    cfg.verify = "exhaustive";
    cfg.benchmark_name = "rand" + std::to_string( i );
    auto const r = run_pipeline( cfg, net );
    if ( r.status != pipeline_status::ok || !r.validation.ok() || !r.equivalence.equal )
    {
      return { false, "random net " + std::to_string( i ) + ": " + r.message };
    }
  }
  return { true, "adders 1..16 plus 50 random nets" };
}

/* criterion 7: complete mapping of the 128-bit ripple adder */
criterion_result adder128_structure()
{
  run_config cfg;
  cfg.input_path = "gen:adder:128";
  cfg.mode = run_mode::multiphase_t1;
  cfg.phases = 4;
  cfg.ilp_timeout_ms = 1500;
  cfg.csp_timeout_ms = 1500;
  cfg.verify = "random:20000";
  auto const r = run_pipeline( cfg );
  if ( r.status != pipeline_status::ok )
  {
    return { false, r.message };
  }
  if ( r.t1.found != r.t1.used )
  {
    return { false, "found " + std::to_string( r.t1.found ) + " != used " +
                        std::to_string( r.t1.used ) };
  }
  if ( r.t1.used != 128 )
  {
    return { false, "mapped " + std::to_string( r.t1.used ) + " of 128 full-adder cones" };
  }
  return { true, "found = used = 128" };
}

/* criterion 8: T1 mapping must pay off against plain multiphase */
criterion_result directional_area()
{
  auto run_modes = []( std::string const& input, std::string const& verify ) {
    std::array<pipeline_result, 2> out;
    int i = 0;
    for ( run_mode mode : { run_mode::multiphase, run_mode::multiphase_t1 } )
    {
      run_config cfg;
      cfg.input_path = input;
      cfg.mode = mode;
      cfg.phases = 4;
      cfg.ilp_timeout_ms = 1200;
      cfg.csp_timeout_ms = 1200;
      cfg.verify = verify;
      out[static_cast<size_t>( i++ )] = run_pipeline( cfg );
    }
    return out;
  };

  auto const adder = run_modes( "gen:adder:64", "random:20000" );
  if ( adder[0].status != pipeline_status::ok || adder[1].status != pipeline_status::ok )
  {
    return { false, "adder64 flow failed" };
  }
  double const area_ratio = static_cast<double>( adder[1].row.jj_area ) /
                            static_cast<double>( adder[0].row.jj_area );
  double const depth_ratio = static_cast<double>( adder[1].row.depth_cycles ) /
                             static_cast<double>( adder[0].row.depth_cycles );
  if ( area_ratio > 0.97 )
  {
    return { false, "adder64 area ratio " + std::to_string( area_ratio ) + " above 0.97" };
  }
  if ( depth_ratio > 1.25 )
  {
    return { false, "adder64 depth ratio " + std::to_string( depth_ratio ) + " above 1.25" };
  }
  std::ostringstream note;
  note.setf( std::ios::fixed );
  note.precision( 2 );
  note << "adder64 area ratio " << area_ratio << ", depth ratio " << depth_ratio;

  // ISCAS c6288 runs only when the user supplies the file
  char const* env = std::getenv( "SFQMAP_C6288" );
  std::string const c6288 = env ? env : "benchmarks/c6288.blif";
  if ( std::filesystem::exists( c6288 ) )
  {
    auto const mult = run_modes( c6288, "random:20000" );
    if ( mult[0].status != pipeline_status::ok || mult[1].status != pipeline_status::ok )
    {
      return { false, "c6288 flow failed" };
    }
    double const r2 = static_cast<double>( mult[1].row.jj_area ) /
                      static_cast<double>( mult[0].row.jj_area );
    double const d2 = static_cast<double>( mult[1].row.depth_cycles ) /
                      static_cast<double>( mult[0].row.depth_cycles );
    if ( r2 > 0.97 || d2 > 1.25 )
    {
      return { false, "c6288 ratios out of range" };
    }
    note << "; c6288 area ratio " << r2;
  }
  else
  {
    note << "; c6288 skipped (file not supplied)";
  }
  return { true, note.str() };
}

/* criterion 9: n = 1 collapses to classical per-edge balancing */
criterion_result single_phase_identity()
{
  auto const costs = cost_table::defaults();
  std::mt19937 rng( 31 );
  for ( int iter = 0; iter < 100; ++iter )
  {
    // single-consumer nets: sharing cannot undercut the per-edge sum
    netlist net;
    std::vector<uint32_t> open;
    for ( int i = 0; i < 3; ++i )
    {
      open.push_back( net.add_pi() );
    }
    for ( int i = 0; i < 8 + static_cast<int>( rng() % 8 ); ++i )
    {
      if ( open.size() >= 2 && ( rng() & 1 ) )
      {
        uint32_t const u = open[rng() % open.size()];
        uint32_t v = u;
        while ( v == u )
        {
          v = open[rng() % open.size()];
        }
        open.erase( std::find( open.begin(), open.end(), u ) );
        open.erase( std::find( open.begin(), open.end(), v ) );
        open.push_back( net.add_gate( gate_kind::and2, { signal( u ), signal( v ) } ) );
      }
      else
      {
        uint32_t const u = open[rng() % open.size()];
        open.erase( std::find( open.begin(), open.end(), u ) );
        open.push_back( net.add_gate( gate_kind::inv, { signal( u ) } ) );
      }
    }
    for ( uint32_t v : open )
    {
      if ( net.kind_of( v ) != gate_kind::pi )
      {
        net.add_po( signal( v ) );
      }
    }
    auto const m = build_ilp( net, 1 );
    auto const st = solve_stages( m );
    auto const model = build_csp( net, st );
    auto const design = solve_balancing( net, st, model, costs );
    int64_t classical = 0;
    for ( auto const& tree : model.trees )
    {
      for ( auto const& sink : tree.sinks )
      {
        classical += sink.sigma_v - tree.sigma_u - 1;
      }
    }
    if ( design.metrics.dff_count != classical )
    {
      return { false, "count " + std::to_string( design.metrics.dff_count ) + " vs classical " +
                          std::to_string( classical ) };
    }
  }
  return { true, "100 nets" };
}

} // namespace

int main()
{
  std::printf( "acceptance suite\n" );
  run_criterion( 1, "t1-family-oracle", family_oracle );
  run_criterion( 2, "pulse-boolean-agreement", pulse_boolean_agreement );
  run_criterion( 3, "equation-unit-suites", equation_suites );
  run_criterion( 4, "ilp-optimality", ilp_optimality );
  run_criterion( 5, "csp-exactness", csp_exactness );
  run_criterion( 6, "end-to-end-equivalence", end_to_end_equivalence );
  run_criterion( 7, "adder128-structure", adder128_structure );
  run_criterion( 8, "directional-area", directional_area );
  run_criterion( 9, "single-phase-identity", single_phase_identity );
  if ( failures == 0 )
  {
    std::printf( "all criteria passed\n" );
  }
  else
  {
    std::printf( "%d criteria failed\n", failures );
  }
  return failures;
}
