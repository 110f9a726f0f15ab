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
  \file design_json.hpp
  \brief Mapped-design JSON: nodes with stages, T1 bindings, DFF chains

  Schema (format_version 1): phases, pis, pos, one object per live node
  with kind, fanins (node/pin/complemented), and sigma/phi/epoch for
  clocked elements; T1 nodes additionally carry their input release
  stages and used outputs. Writing then reading reproduces the design;
  the writer is byte-deterministic.
*/

#pragma once

#include "../balancing.hpp"
#include "../netlist.hpp"
#include "parse_error.hpp"

#include <json.hpp>

#include <string>

namespace sfqmap
{

inline std::string write_design( balanced_design const& design )
{
  using json = nlohmann::ordered_json;
  netlist const& net = design.net;
  // canonical ids: topological positions, so writing is byte-deterministic
  // and rereading reproduces the same ids
  std::vector<uint32_t> file_id( net.size(), UINT32_MAX );
  {
    uint32_t next = 0;
    for ( uint32_t id : net.topo_order() )
    {
      file_id[id] = next++;
    }
  }
  json j;
  j["format_version"] = 1;
  j["phases"] = design.stages.phases;
  {
    std::vector<uint32_t> pis, pos;
    for ( uint32_t pi : net.pis() )
    {
      pis.push_back( file_id[pi] );
    }
    for ( uint32_t po : net.pos() )
    {
      pos.push_back( file_id[po] );
    }
    j["pis"] = pis;
    j["pos"] = pos;
  }
  json nodes = json::array();
  for ( uint32_t id : net.topo_order() )
  {
    auto const& g = net.node_at( id );
    json nd;
    nd["id"] = file_id[id];
    nd["kind"] = std::string( gate_kind_names[static_cast<size_t>( g.kind )] );
    json fis = json::array();
    for ( auto const& f : g.fanins )
    {
      json fi;
      fi["node"] = file_id[f.node];
      if ( f.pin != t1_output::sum )
      {
        fi["pin"] = std::string( t1_output_names[static_cast<size_t>( f.pin )] );
      }
      if ( f.complemented )
      {
        fi["complemented"] = true;
      }
      fis.push_back( std::move( fi ) );
    }
    nd["fanins"] = std::move( fis );
    if ( design.stages.has_stage( id ) )
    {
      int64_t const s = design.stages.sigma[id];
      nd["sigma"] = s;
      nd["phi"] = s % design.stages.phases;
      nd["epoch"] = s / design.stages.phases;
    }
    if ( g.kind == gate_kind::t1 )
    {
      json in_stages = json::array();
      for ( auto const& f : g.fanins )
      {
        in_stages.push_back( design.stages.has_stage( f.node ) ? design.stages.sigma[f.node]
                                                               : 0 );
      }
      nd["input_stages"] = std::move( in_stages );
      json used = json::array();
      auto const u = net.t1_used_outputs( id );
      for ( size_t p = 0; p < t1_output_count; ++p )
      {
        if ( u[p] )
        {
          used.push_back( std::string( t1_output_names[p] ) );
        }
      }
      nd["used_outputs"] = std::move( used );
    }
    nodes.push_back( std::move( nd ) );
  }
  j["nodes"] = std::move( nodes );
  j["metrics"] = { { "dff_count", design.metrics.dff_count },
                   { "jj_area", design.metrics.jj_area },
                   { "depth_cycles", design.metrics.depth_cycles } };
  return j.dump( 2 ) + "\n";
}

/*! \brief Companion reader; round-trips write_design losslessly. */
inline balanced_design read_design( std::string const& bytes )
{
  using json = nlohmann::json;
  json j;
  try
  {
    j = json::parse( bytes );
  }
  catch ( json::parse_error const& e )
  {
    throw parse_error( 1, std::string( "invalid JSON: " ) + e.what() );
  }
  if ( !j.contains( "format_version" ) || j["format_version"].get<int>() != 1 )
  {
    throw parse_error( 1, "unsupported design format version" );
  }
  balanced_design design;
  design.stages.phases = j.at( "phases" ).get<uint32_t>();

  auto kind_of = []( std::string const& name ) {
    for ( size_t k = 0; k < gate_kind_count; ++k )
    {
      if ( gate_kind_names[k] == name )
      {
        return static_cast<gate_kind>( k );
      }
    }
    throw parse_error( 1, "unknown gate kind " + name );
  };
  auto pin_of = []( std::string const& name ) {
    for ( size_t p = 0; p < t1_output_count; ++p )
    {
      if ( t1_output_names[p] == name )
      {
        return static_cast<t1_output>( p );
      }
    }
    throw parse_error( 1, "unknown T1 output " + name );
  };

  // ids are topological in the file; remap defensively anyway
  std::map<uint32_t, uint32_t> remap;
  for ( auto const& nd : j.at( "nodes" ) )
  {
    uint32_t const file_id = nd.at( "id" ).get<uint32_t>();
    gate_kind const kind = kind_of( nd.at( "kind" ).get<std::string>() );
    std::vector<signal> fanins;
    for ( auto const& fi : nd.at( "fanins" ) )
    {
      uint32_t const ref = fi.at( "node" ).get<uint32_t>();
      auto const it = remap.find( ref );
      if ( it == remap.end() )
      {
        throw parse_error( 1, "fanin before definition: node " + std::to_string( ref ) );
      }
      t1_output const pin = fi.contains( "pin" ) ? pin_of( fi["pin"].get<std::string>() )
                                                 : t1_output::sum;
      bool const compl_flag = fi.contains( "complemented" ) && fi["complemented"].get<bool>();
      fanins.push_back( signal( it->second, compl_flag, pin ) );
    }
    uint32_t const id = design.net.add_gate( kind, std::move( fanins ) );
    remap[file_id] = id;
    design.stages.sigma.resize( design.net.size(), -1 );
    design.stages.stored_phi.resize( design.net.size(), -1 );
    design.stages.stored_epoch.resize( design.net.size(), -1 );
    if ( nd.contains( "sigma" ) )
    {
      design.stages.sigma[id] = nd["sigma"].get<int64_t>();
      if ( nd.contains( "phi" ) )
      {
        design.stages.stored_phi[id] = nd["phi"].get<int64_t>();
      }
      if ( nd.contains( "epoch" ) )
      {
        design.stages.stored_epoch[id] = nd["epoch"].get<int64_t>();
      }
    }
  }
  auto remap_list = [&]( json const& arr ) {
    std::vector<uint32_t> out;
    for ( auto const& v : arr )
    {
      auto const it = remap.find( v.get<uint32_t>() );
      if ( it == remap.end() )
      {
        throw parse_error( 1, "interface references an unknown node" );
      }
      out.push_back( it->second );
    }
    return out;
  };
  design.net.reorder_interface( remap_list( j.at( "pis" ) ), remap_list( j.at( "pos" ) ) );
  if ( j.contains( "metrics" ) )
  {
    design.metrics.dff_count = j["metrics"].value( "dff_count", int64_t{ 0 } );
    design.metrics.jj_area = j["metrics"].value( "jj_area", int64_t{ 0 } );
    design.metrics.depth_cycles = j["metrics"].value( "depth_cycles", int64_t{ 0 } );
  }
  return design;
}

} // namespace sfqmap
