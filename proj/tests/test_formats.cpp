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

#include <sfqmap/io/aiger.hpp>
#include <sfqmap/io/blif.hpp>
#include <sfqmap/io/cost_table_io.hpp>
#include <sfqmap/io/design_json.hpp>
#include <sfqmap/io/report_json.hpp>
#include <sfqmap/io/stats_csv.hpp>
#include <sfqmap/pipeline.hpp>

#include "test_util.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace sfqmap;

TEST_CASE( "AIGER ASCII", "[formats]" )
{
  SECTION( "one AND over two inputs" )
  {
    auto const net = read_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 4\n" );
    CHECK( net.pis().size() == 2 );
    CHECK( net.pos().size() == 1 );
    size_t ands = 0;
    for ( uint32_t id = 0; id < net.size(); ++id )
    {
      ands += net.kind_of( id ) == gate_kind::and2 ? 1 : 0;
    }
    CHECK( ands == 1 );
    CHECK( net.eval( { true, true } ) == std::vector<bool>{ true } );
    CHECK( net.eval( { true, false } ) == std::vector<bool>{ false } );
  }
  SECTION( "complemented output" )
  {
    auto const net = read_aiger( "aag 3 2 0 1 1\n2\n4\n7\n6 2 4\n" );
    CHECK( net.eval( { true, true } ) == std::vector<bool>{ false } );
  }
  SECTION( "latches are unsupported" )
  {
    CHECK_THROWS_AS( read_aiger( "aag 3 1 1 1 0\n2\n4 2\n4\n" ), parse_error );
  }
  SECTION( "constant literals are unsupported" )
  {
    CHECK_THROWS_AS( read_aiger( "aag 1 0 0 1 0\n0\n" ), parse_error );
    CHECK_THROWS_AS( read_aiger( "aag 2 1 0 1 1\n2\n4\n4 2 1\n" ), parse_error );
  }
  SECTION( "bad header carries a line number" )
  {
    try
    {
      read_aiger( "aag x\n" );
      FAIL( "expected parse_error" );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == 1 );
    }
  }
}

TEST_CASE( "AIGER binary", "[formats]" )
{
  // aig 3 2 0 1 1 with and 6 = 4 & 2: deltas 2, 2
  std::string bytes = "aig 3 2 0 1 1\n6\n";
  bytes.push_back( static_cast<char>( 2 ) );
  bytes.push_back( static_cast<char>( 2 ) );
  auto const net = read_aiger( bytes );
  CHECK( net.pis().size() == 2 );
  CHECK( net.pos().size() == 1 );
  CHECK( net.eval( { true, true } ) == std::vector<bool>{ true } );
  CHECK( net.eval( { false, true } ) == std::vector<bool>{ false } );
}

TEST_CASE( "BLIF subset", "[formats]" )
{
  SECTION( "full adder from cubes" )
  {
    std::string const src = ".model fa\n"
                            ".inputs a b c\n"
                            ".outputs s cout\n"
                            ".names a b c s\n"
                            "100 1\n"
                            "010 1\n"
                            "001 1\n"
                            "111 1\n"
                            ".names a b c cout\n"
                            "11- 1\n"
                            "1-1 1\n"
                            "-11 1\n"
                            ".end\n";
    auto const net = read_blif( src );
    CHECK( net.pis().size() == 3 );
    CHECK( net.pos().size() == 2 );
    for ( uint8_t m = 0; m < 8; ++m )
    {
      bool const a = m & 1, b = m & 2, c = m & 4;
      auto const out = net.eval( { a, b, c } );
      CHECK( out[0] == ( a ^ b ^ c ) );
      CHECK( out[1] == ( ( a && b ) || ( a && c ) || ( b && c ) ) );
    }
  }
  SECTION( "off-set covers and complements" )
  {
    std::string const src = ".model inv\n.inputs a\n.outputs y\n.names a y\n1 0\n.end\n";
    auto const net = read_blif( src );
    CHECK( net.eval( { true } ) == std::vector<bool>{ false } );
    CHECK( net.eval( { false } ) == std::vector<bool>{ true } );
  }
  SECTION( "four-input covers are unsupported" )
  {
    std::string const src =
        ".model bad\n.inputs a b c d\n.outputs y\n.names a b c d y\n1111 1\n.end\n";
    try
    {
      read_blif( src );
      FAIL( "expected parse_error" );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == 4 );
    }
  }
  SECTION( "latches are unsupported" )
  {
    std::string const src = ".model l\n.inputs a\n.outputs y\n.latch a y 0\n.end\n";
    CHECK_THROWS_AS( read_blif( src ), parse_error );
  }
  SECTION( "don't-care expansion is exact on random covers" )
  {
    std::mt19937 rng( 3 );
    for ( int iter = 0; iter < 40; ++iter )
    {
      uint16_t const tt = static_cast<uint16_t>( rng() % 255 + 1 );
      if ( tt == 0xff )
      {
        continue;
      }
      std::ostringstream src;
      src << ".model f\n.inputs a b c\n.outputs y\n.names a b c y\n";
      for ( uint8_t m = 0; m < 8; ++m )
      {
        if ( ( tt >> m ) & 1 )
        {
          src << ( ( m & 1 ) ? '1' : '0' ) << ( ( m & 2 ) ? '1' : '0' )
              << ( ( m & 4 ) ? '1' : '0' ) << " 1\n";
        }
      }
      src << ".end\n";
      auto const net = read_blif( src.str() );
      for ( uint8_t m = 0; m < 8; ++m )
      {
        CHECK( net.eval( { ( m & 1 ) != 0, ( m & 2 ) != 0, ( m & 4 ) != 0 } ) ==
               std::vector<bool>{ ( ( tt >> m ) & 1 ) != 0 } );
      }
    }
  }
}

TEST_CASE( "design JSON round trip", "[formats]" )
{
  SECTION( "empty design" )
  {
    balanced_design d;
    d.stages.phases = 4;
    auto const bytes = write_design( d );
    auto const back = read_design( bytes );
    CHECK( back.net.size() == 0 );
    CHECK( write_design( back ) == bytes );
  }
  SECTION( "one T1 cell carries three input stage fields" )
  {
    balanced_design d;
    uint32_t const a = d.net.add_pi(), b = d.net.add_pi(), c = d.net.add_pi();
    uint32_t const da = d.net.add_gate( gate_kind::dff, { signal( a ) } );
    uint32_t const db = d.net.add_gate( gate_kind::dff, { signal( b ) } );
    uint32_t const t =
        d.net.add_gate( gate_kind::t1, { signal( da ), signal( db ), signal( c ) } );
    d.net.add_po( signal( t, false, t1_output::sum ) );
    d.net.add_po( signal( t, false, t1_output::carry ) );
    d.stages.phases = 4;
    d.stages.sigma.assign( d.net.size(), -1 );
    d.stages.sigma[da] = 1;
    d.stages.sigma[db] = 2;
    d.stages.sigma[t] = 4;
    auto const bytes = write_design( d );
    CHECK( bytes.find( "\"T1\"" ) != std::string::npos );
    CHECK( bytes.find( "input_stages" ) != std::string::npos );
    auto const back = read_design( bytes );
    CHECK( write_design( back ) == bytes );
    CHECK( validate_schedule( back, 4 ).ok() );
  }
  SECTION( "full pipeline output round-trips losslessly" )
  {
    run_config cfg;
    cfg.input_path = "gen:adder:3";
    cfg.ilp_timeout_ms = 200;
    cfg.csp_timeout_ms = 200;
    auto const r = run_pipeline( cfg );
    REQUIRE( r.status == pipeline_status::ok );
    auto const bytes = write_design( r.design );
    auto const back = read_design( bytes );
    CHECK( write_design( back ) == bytes );
    // functions survive the round trip
    auto const ref = gen_ripple_adder( 3 );
    auto const v = check_equivalence( ref, back, equivalence_mode::exhaustive_mode() );
    CHECK( v.equal );
  }
}

TEST_CASE( "parse, write, parse yields an isomorphic netlist", "[formats]" )
{
  // through the mapped-design JSON with a trivial (unstaged) wrap
  std::string const src = ".model fa\n"
                          ".inputs a b c\n"
                          ".outputs s cout\n"
                          ".names a b c s\n100 1\n010 1\n001 1\n111 1\n"
                          ".names a b c cout\n11- 1\n1-1 1\n-11 1\n"
                          ".end\n";
  auto const net = read_blif( src );
  balanced_design d;
  d.net = net;
  d.stages.phases = 1;
  d.stages.sigma.assign( net.size(), -1 );
  auto const back = read_design( write_design( d ) );
  REQUIRE( back.net.pis().size() == net.pis().size() );
  REQUIRE( back.net.pos().size() == net.pos().size() );
  for ( uint8_t m = 0; m < 8; ++m )
  {
    std::vector<bool> const in{ ( m & 1 ) != 0, ( m & 2 ) != 0, ( m & 4 ) != 0 };
    CHECK( back.net.eval( in ) == net.eval( in ) );
  }
}

TEST_CASE( "ISCAS c6288 when the file is supplied", "[formats]" )
{
  char const* env = std::getenv( "SFQMAP_C6288" );
  std::string const path = env ? env : "benchmarks/c6288.blif";
  if ( !std::filesystem::exists( path ) )
  {
    SUCCEED( "c6288 not supplied, skipping" );
    return;
  }
  std::ifstream in( path, std::ios::binary );
  std::ostringstream os;
  os << in.rdbuf();
  auto const net = read_blif( os.str() );
  CHECK( net.pis().size() == 32 );
  CHECK( net.pos().size() == 32 );
}

TEST_CASE( "stats CSV", "[formats]" )
{
  SECTION( "header only" )
  {
    CHECK( write_stats( {} ) ==
           "benchmark,t1_found,t1_used,dff_count,jj_area,depth_cycles,phases,runtime_ms\n" );
  }
  SECTION( "rows in order" )
  {
    stats_row r;
    r.benchmark = "adder";
    r.t1_found = 127;
    r.t1_used = 127;
    r.dff_count = 5958;
    r.jj_area = 48844;
    r.depth_cycles = 33;
    r.phases = 4;
    r.runtime_ms = 10;
    auto const csv = write_stats( { r } );
    CHECK( csv.find( "adder,127,127,5958,48844,33,4,10\n" ) != std::string::npos );
  }
}

TEST_CASE( "report JSON", "[formats]" )
{
  validation_report rep;
  rep.violations.push_back(
      { violation_kind::gap, 7, "window exceeded: gap 5 > 4" } );
  auto const bytes = write_validation_report( rep );
  CHECK( bytes.find( "\"legal\": false" ) != std::string::npos );
  CHECK( bytes.find( "\"gap\"" ) != std::string::npos );

  equivalence_verdict v;
  v.equal = false;
  v.has_counterexample = true;
  v.counterexample = { true, false, true };
  auto const cx = write_equivalence_verdict( v );
  CHECK( cx.find( "\"counterexample\"" ) != std::string::npos );
  CHECK( cx.find( "[\n    1,\n    0,\n    1\n  ]" ) != std::string::npos );
}

TEST_CASE( "cost table files", "[formats]" )
{
  SECTION( "overrides on top of defaults" )
  {
    auto const t = read_cost_table( "AND2=12\nt1_base=31\n# comment\n\ninverter_out=7\n" );
    CHECK( t.cost( gate_kind::and2 ) == 12 );
    CHECK( t.cost( gate_kind::or2 ) == 8 ); // untouched default
    CHECK( t.t1_base == 31 );
    CHECK( t.inverter_out == 7 );
  }
  SECTION( "unknown keys and bad values carry line numbers" )
  {
    try
    {
      read_cost_table( "AND2=10\nBOGUS=3\n" );
      FAIL( "expected parse_error" );
    }
    catch ( parse_error const& e )
    {
      CHECK( e.line() == 2 );
    }
    CHECK_THROWS_AS( read_cost_table( "AND2=ten\n" ), parse_error );
    CHECK_THROWS_AS( read_cost_table( "AND2=-4\n" ), parse_error );
  }
  SECTION( "write then read is the identity" )
  {
    auto const t = cost_table::defaults();
    auto const back = read_cost_table( write_cost_table( t ) );
    for ( size_t k = 0; k < gate_kind_count; ++k )
    {
      if ( static_cast<gate_kind>( k ) == gate_kind::t1 )
      {
        continue; // T1 is priced through t1_base and the inverter entries
      }
      CHECK( back.cost( static_cast<gate_kind>( k ) ) == t.cost( static_cast<gate_kind>( k ) ) );
    }
    CHECK( back.t1_base == t.t1_base );
    CHECK( back.inverter_in == t.inverter_in );
    CHECK( back.inverter_out == t.inverter_out );
  }
}
