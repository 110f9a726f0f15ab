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
  \file pipeline.hpp
  \brief Orchestration: parse, T1 mapping, staging, balancing, verify, report

  No design is ever written unless its validation report is empty and the
  equivalence check against the parsed source passed. Time limits map
  onto deterministic search budgets, so identical configuration, input
  and seed reproduce identical artifacts byte for byte (runtime column
  aside).
*/

#pragma once

#include "balancing.hpp"
#include "cut_enumeration.hpp"
#include "generators.hpp"
#include "io/aiger.hpp"
#include "io/blif.hpp"
#include "io/cost_table_io.hpp"
#include "io/design_json.hpp"
#include "io/stats_csv.hpp"
#include "netlist.hpp"
#include "staging.hpp"
#include "t1_matching.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sfqmap
{

enum class run_mode
{
  single_phase,
  multiphase,
  multiphase_t1
};

inline char const* run_mode_name( run_mode m )
{
  switch ( m )
  {
  case run_mode::single_phase:
    return "1phase";
  case run_mode::multiphase:
    return "multiphase";
  case run_mode::multiphase_t1:
  default:
    return "multiphase+t1";
  }
}

inline run_mode parse_run_mode( std::string const& s )
{
  if ( s == "1phase" )
  {
    return run_mode::single_phase;
  }
  if ( s == "multiphase" )
  {
    return run_mode::multiphase;
  }
  if ( s == "multiphase+t1" )
  {
    return run_mode::multiphase_t1;
  }
  throw std::invalid_argument( "unknown mode " + s + " (1phase|multiphase|multiphase+t1)" );
}

struct run_config
{
  std::string input_path;         // file, or gen:adder:N / gen:mult:N
  std::string format{ "auto" };   // aiger | blif | auto
  uint32_t phases{ 4 };
  run_mode mode{ run_mode::multiphase_t1 };
  std::string cost_table_path;    // empty: built-in defaults
  uint64_t seed{ 1 };
  std::string verify{ "auto" };   // auto | exhaustive | random:N
  int64_t ilp_timeout_ms{ 10'000 };
  int64_t csp_timeout_ms{ 10'000 };
  std::string out_design;
  std::string out_stats;
  std::string benchmark_name;     // stats label; defaults to input_path
  uint32_t cut_limit{ 16 };
};

enum class pipeline_status : int
{
  ok = 0,
  config_error = 2,
  parse_failure = 3,
  solver_timeout = 4,
  verification_failure = 5
};

struct pipeline_result
{
  pipeline_status status{ pipeline_status::ok };
  std::string message;
  balanced_design design;
  rewrite_stats t1;
  stats_row row;
  validation_report validation;
  equivalence_verdict equivalence;
};

namespace detail
{

inline std::string slurp( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path );
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline netlist load_input( run_config const& cfg )
{
  if ( cfg.input_path.rfind( "gen:", 0 ) == 0 )
  {
    auto const rest = cfg.input_path.substr( 4 );
    auto const colon = rest.find( ':' );
    if ( colon == std::string::npos )
    {
      throw std::invalid_argument( "generator syntax: gen:adder:N or gen:mult:N" );
    }
    auto const kind = rest.substr( 0, colon );
    uint32_t const n = static_cast<uint32_t>( std::stoul( rest.substr( colon + 1 ) ) );
    if ( kind == "adder" )
    {
      return gen_ripple_adder( n );
    }
    if ( kind == "mult" )
    {
      return gen_array_multiplier( n );
    }
    throw std::invalid_argument( "unknown generator " + kind );
  }
  auto const bytes = slurp( cfg.input_path );
  std::string fmt = cfg.format;
  if ( fmt == "auto" )
  {
    if ( bytes.rfind( "aag ", 0 ) == 0 || bytes.rfind( "aig ", 0 ) == 0 )
    {
      fmt = "aiger";
    }
    else
    {
      fmt = "blif";
    }
  }
  if ( fmt == "aiger" )
  {
    return read_aiger( bytes );
  }
  if ( fmt == "blif" )
  {
    return read_blif( bytes );
  }
  throw std::invalid_argument( "unknown format " + fmt + " (aiger|blif|auto)" );
}

inline equivalence_mode pick_verify_mode( std::string const& spec, size_t num_pi, uint64_t seed )
{
  if ( spec == "exhaustive" )
  {
    return equivalence_mode::exhaustive_mode();
  }
  if ( spec.rfind( "random:", 0 ) == 0 )
  {
    return equivalence_mode::random( std::stoull( spec.substr( 7 ) ), seed );
  }
  if ( spec == "auto" )
  {
    return num_pi <= 20 ? equivalence_mode::exhaustive_mode()
                        : equivalence_mode::random( 100'000, seed );
  }
  throw std::invalid_argument( "unknown verify mode " + spec );
}

/* deterministic budget: limits are enforced as search-node counts */
inline int64_t budget_from_ms( int64_t ms )
{
  return std::max<int64_t>( 1, ms ) * 20'000;
}

} // namespace detail

/*! \brief Full flow on an already-loaded netlist. */
inline pipeline_result run_pipeline( run_config const& cfg, netlist const& source_in )
{
  pipeline_result res;
  auto const t_start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t_start )
        .count();
  };

  // configuration
  if ( cfg.phases < 1 )
  {
    res.status = pipeline_status::config_error;
    res.message = "phase count must be at least 1";
    return res;
  }
  if ( cfg.mode == run_mode::multiphase_t1 && cfg.phases < 3 )
  {
    res.status = pipeline_status::config_error;
    res.message = "multiphase+t1 requires at least 3 phases";
    return res;
  }
  cost_table costs;
  try
  {
    costs = cfg.cost_table_path.empty()
                ? cost_table::defaults()
                : read_cost_table( detail::slurp( cfg.cost_table_path ) );
  }
  catch ( std::exception const& e )
  {
    res.status = pipeline_status::config_error;
    res.message = e.what();
    return res;
  }
  netlist const& source = source_in;
  equivalence_mode verify_mode;
  try
  {
    verify_mode = detail::pick_verify_mode( cfg.verify, source.pis().size(), cfg.seed );
  }
  catch ( std::exception const& e )
  {
    res.status = pipeline_status::config_error;
    res.message = e.what();
    return res;
  }

  uint32_t const n = cfg.mode == run_mode::single_phase ? 1u : cfg.phases;

  // T1 detection and rewrite
  netlist mapped = source;
  if ( cfg.mode == run_mode::multiphase_t1 )
  {
    auto const cuts = enumerate_cuts( mapped, 3, cfg.cut_limit );
    auto const cands = group_candidates( mapped, cuts, costs );
    res.t1 = select_and_rewrite( mapped, cands, costs );
  }
  auto [compacted, remap] = mapped.compact();
  (void)remap;

  // stage assignment and DFF insertion
  balanced_design design;
  try
  {
    auto const model = build_ilp( compacted, n );
    solve_stage_params sp;
    sp.node_budget = detail::budget_from_ms( cfg.ilp_timeout_ms );
    auto const stages = solve_stages( model, sp );
    auto const csp = build_csp( compacted, stages );
    balance_params bp;
    bp.node_budget = detail::budget_from_ms( cfg.csp_timeout_ms );
    design = solve_balancing( compacted, stages, csp, costs, bp );
  }
  catch ( std::exception const& e )
  {
    res.status = pipeline_status::solver_timeout;
    res.message = e.what();
    return res;
  }

  // never emit an unvalidated design
  res.validation = validate_schedule( design, n );
  if ( !res.validation.ok() )
  {
    res.status = pipeline_status::verification_failure;
    res.message = "schedule validation reported " +
                  std::to_string( res.validation.violations.size() ) + " violation(s)";
    return res;
  }
  res.equivalence = check_equivalence( source, design, verify_mode );
  if ( !res.equivalence.equal )
  {
    res.status = pipeline_status::verification_failure;
    res.message = "equivalence check failed";
    return res;
  }

  res.design = std::move( design );
  res.row.benchmark = ( cfg.benchmark_name.empty() ? cfg.input_path : cfg.benchmark_name ) +
                      std::string( ":" ) + run_mode_name( cfg.mode );
  res.row.t1_found = res.t1.found;
  res.row.t1_used = res.t1.used;
  res.row.dff_count = res.design.metrics.dff_count;
  res.row.jj_area = res.design.metrics.jj_area;
  res.row.depth_cycles = res.design.metrics.depth_cycles;
  res.row.phases = n;
  res.row.runtime_ms = elapsed_ms();

  if ( !cfg.out_design.empty() )
  {
    std::ofstream out( cfg.out_design, std::ios::binary );
    out << write_design( res.design );
  }
  if ( !cfg.out_stats.empty() )
  {
    std::ofstream out( cfg.out_stats, std::ios::binary );
    out << write_stats( { res.row } );
  }
  return res;
}

inline pipeline_result run_pipeline( run_config const& cfg )
{
  netlist source;
  try
  {
    source = detail::load_input( cfg );
  }
  catch ( std::exception const& e )
  {
    pipeline_result res;
    res.status = pipeline_status::parse_failure;
    res.message = e.what();
    return res;
  }
  return run_pipeline( cfg, source );
}

struct benchmark_case
{
  std::string name;
  std::string path;
  std::string format{ "auto" };
};

/*! \brief Manifest JSON: {"cases": [{"name":..., "path":..., "format":...}]} */
inline std::vector<benchmark_case> read_manifest( std::string const& bytes )
{
  using json = nlohmann::json;
  json j;
  try
  {
    j = json::parse( bytes );
  }
  catch ( json::parse_error const& e )
  {
    throw parse_error( 1, std::string( "invalid manifest: " ) + e.what() );
  }
  std::vector<benchmark_case> cases;
  std::set<std::string> names;
  for ( auto const& c : j.at( "cases" ) )
  {
    benchmark_case bc;
    bc.name = c.at( "name" ).get<std::string>();
    bc.path = c.at( "path" ).get<std::string>();
    bc.format = c.value( "format", std::string( "auto" ) );
    if ( !names.insert( bc.name ).second )
    {
      throw parse_error( 1, "duplicate case name " + bc.name );
    }
    cases.push_back( std::move( bc ) );
  }
  return cases;
}

struct suite_result
{
  std::vector<stats_row> rows;  // manifest order, three modes per case
  std::vector<std::string> failures;
  std::string ratio_summary;
};

/*! \brief Runs every case in all three modes; cases run concurrently but
 * rows stay in manifest order. Per-case failures zero the row and are
 * recorded; the suite continues.
 */
inline suite_result run_suite( std::vector<benchmark_case> const& cases, run_config base )
{
  suite_result suite;
  auto run_case = [&]( benchmark_case const& bc ) {
    std::vector<stats_row> rows;
    std::vector<std::string> fails;
    std::array<double, 3> area{}, dff{}, depth{};
    for ( run_mode mode :
          { run_mode::single_phase, run_mode::multiphase, run_mode::multiphase_t1 } )
    {
      run_config cfg = base;
      cfg.input_path = bc.path;
      cfg.format = bc.format;
      cfg.mode = mode;
      cfg.benchmark_name = bc.name;
      cfg.out_design.clear();
      cfg.out_stats.clear();
      auto const r = run_pipeline( cfg );
      if ( r.status != pipeline_status::ok )
      {
        fails.push_back( bc.name + ":" + run_mode_name( mode ) + ": " + r.message );
        stats_row zero;
        zero.benchmark = bc.name + std::string( ":" ) + run_mode_name( mode );
        rows.push_back( zero );
      }
      else
      {
        rows.push_back( r.row );
        auto const m = static_cast<size_t>( mode );
        area[m] = static_cast<double>( r.row.jj_area );
        dff[m] = static_cast<double>( r.row.dff_count );
        depth[m] = static_cast<double>( r.row.depth_cycles );
      }
    }
    std::ostringstream ratio;
    if ( fails.empty() && area[0] > 0 && area[1] > 0 )
    {
      auto const f = []( double x ) {
        std::ostringstream os;
        os.setf( std::ios::fixed );
        os.precision( 2 );
        os << x;
        return os.str();
      };
      ratio << bc.name << ": dff " << f( dff[2] / dff[0] ) << " vs 1ph, " << f( dff[2] / dff[1] )
            << " vs " << base.phases << "ph; area " << f( area[2] / area[0] ) << " vs 1ph, "
            << f( area[2] / area[1] ) << " vs " << base.phases << "ph; depth "
            << f( depth[2] / depth[0] ) << " vs 1ph, " << f( depth[2] / depth[1] ) << " vs "
            << base.phases << "ph";
    }
    return std::tuple( rows, fails, ratio.str() );
  };

  auto safe_case = [&]( benchmark_case const& bc )
      -> std::tuple<std::vector<stats_row>, std::vector<std::string>, std::string> {
    try
    {
      return run_case( bc );
    }
    catch ( std::exception const& e )
    {
      std::vector<stats_row> rows( 3 );
      for ( size_t m = 0; m < 3; ++m )
      {
        rows[m].benchmark = bc.name + std::string( ":" ) +
                            run_mode_name( static_cast<run_mode>( m ) );
      }
      return { rows, { bc.name + ": " + e.what() }, "" };
    }
  };
  std::vector<std::future<std::tuple<std::vector<stats_row>, std::vector<std::string>, std::string>>>
      futures;
  futures.reserve( cases.size() );
  for ( auto const& bc : cases )
  {
    futures.push_back( std::async( std::launch::async, safe_case, bc ) );
  }
  std::ostringstream summary;
  for ( auto& f : futures )
  {
    auto [rows, fails, ratio] = f.get();
    for ( auto& r : rows )
    {
      suite.rows.push_back( std::move( r ) );
    }
    for ( auto& e : fails )
    {
      suite.failures.push_back( std::move( e ) );
    }
    if ( !ratio.empty() )
    {
      summary << ratio << "\n";
    }
  }
  suite.ratio_summary = summary.str();
  if ( !base.out_stats.empty() )
  {
    std::ofstream out( base.out_stats, std::ios::binary );
    out << write_stats( suite.rows );
  }
  return suite;
}

} // namespace sfqmap
