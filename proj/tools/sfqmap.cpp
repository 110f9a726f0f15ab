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
  \file sfqmap.cpp
  \brief Command-line driver for the mapping pipeline and benchmark suites
*/

#include <sfqmap/io/report_json.hpp>
#include <sfqmap/pipeline.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace
{

bool log_enabled()
{
  char const* v = std::getenv( "SFQMAP_LOG" );
  return v != nullptr && std::string( v ) != "" && std::string( v ) != "0";
}

void log_line( std::string const& s )
{
  if ( log_enabled() )
  {
    std::cerr << "[sfqmap] " << s << "\n";
  }
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "sfqmap: T1-aware technology mapping for multiphase-clocked SFQ circuits" };

  std::string input, format = "auto", mode = "multiphase+t1", cost_table_path, verify = "auto";
  std::string out_design, out_stats, manifest_path;
  uint32_t phases = 4;
  uint64_t seed = 1;
  int64_t ilp_timeout = 10'000, csp_timeout = 10'000;

  app.add_option( "--input", input, "input netlist (file path, gen:adder:N, or gen:mult:N)" );
  app.add_option( "--format", format, "input format: aiger | blif | auto" )
      ->check( CLI::IsMember( { "aiger", "blif", "auto" } ) );
  app.add_option( "--phases", phases, "number of clock phases n" )->check( CLI::Range( 1, 64 ) );
  app.add_option( "--mode", mode, "flow mode: 1phase | multiphase | multiphase+t1" )
      ->check( CLI::IsMember( { "1phase", "multiphase", "multiphase+t1" } ) );
  app.add_option( "--cost-table", cost_table_path, "JJ cost table (KEY=VALUE lines)" );
  app.add_option( "--seed", seed, "seed for randomized verification" );
  app.add_option( "--verify", verify, "equivalence mode: auto | exhaustive | random:N" );
  app.add_option( "--ilp-timeout", ilp_timeout, "stage-assignment limit in ms" );
  app.add_option( "--csp-timeout", csp_timeout, "DFF-insertion limit in ms" );
  app.add_option( "--out-design", out_design, "write the mapped design JSON here" );
  app.add_option( "--out-stats", out_stats, "write the stats CSV here" );
  app.add_option( "--manifest", manifest_path, "run a benchmark suite from this manifest" );

  CLI11_PARSE( app, argc, argv );

  if ( input.empty() == manifest_path.empty() )
  {
    std::cerr << "error: exactly one of --input or --manifest is required\n";
    return static_cast<int>( sfqmap::pipeline_status::config_error );
  }

  sfqmap::run_config cfg;
  cfg.format = format;
  cfg.phases = phases;
  cfg.cost_table_path = cost_table_path;
  cfg.seed = seed;
  cfg.verify = verify;
  cfg.ilp_timeout_ms = ilp_timeout;
  cfg.csp_timeout_ms = csp_timeout;
  cfg.out_design = out_design;
  cfg.out_stats = out_stats;
  try
  {
    cfg.mode = sfqmap::parse_run_mode( mode );
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>( sfqmap::pipeline_status::config_error );
  }

  if ( !manifest_path.empty() )
  {
    try
    {
      auto const cases = sfqmap::read_manifest( sfqmap::detail::slurp( manifest_path ) );
      log_line( "running " + std::to_string( cases.size() ) + " cases" );
      auto const suite = sfqmap::run_suite( cases, cfg );
      std::cout << sfqmap::write_stats( suite.rows );
      if ( !suite.ratio_summary.empty() )
      {
        std::cout << "\n" << suite.ratio_summary;
      }
      for ( auto const& f : suite.failures )
      {
        std::cerr << "case failed: " << f << "\n";
      }
      return suite.failures.empty() ? 0 : 1;
    }
    catch ( std::exception const& e )
    {
      std::cerr << "error: " << e.what() << "\n";
      return static_cast<int>( sfqmap::pipeline_status::config_error );
    }
  }

  cfg.input_path = input;
  log_line( "mapping " + input + " in mode " + mode );
  auto const res = sfqmap::run_pipeline( cfg );
  if ( res.status != sfqmap::pipeline_status::ok )
  {
    std::cerr << "error: " << res.message << "\n";
    if ( res.status == sfqmap::pipeline_status::verification_failure )
    {
      if ( !res.validation.ok() )
      {
        std::cerr << sfqmap::write_validation_report( res.validation );
      }
      if ( !res.equivalence.equal )
      {
        std::cerr << sfqmap::write_equivalence_verdict( res.equivalence );
      }
    }
    return static_cast<int>( res.status );
  }
  std::cout << sfqmap::write_stats( { res.row } );
  log_line( res.design.optimal ? "solvers proved optimality" : "best incumbent (not proven)" );
  return 0;
}
