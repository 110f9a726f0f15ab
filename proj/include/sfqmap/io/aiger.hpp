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
  \file aiger.hpp
  \brief AIGER reader, ASCII and binary, combinational subset

  Latches and constant literals are rejected as unsupported constructs.
*/

#pragma once

#include "../netlist.hpp"
#include "parse_error.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace sfqmap
{

namespace detail
{

struct aiger_data
{
  uint64_t max_var, num_in, num_latch, num_out, num_and;
  std::vector<uint64_t> outputs;                          // literals
  std::vector<std::array<uint64_t, 3>> ands;              // lhs, rhs0, rhs1
  std::vector<uint64_t> inputs;                           // literals
};

inline netlist aiger_build( aiger_data const& d, size_t header_line )
{
  if ( d.num_latch != 0 )
  {
    throw parse_error( header_line, "unsupported construct: latches" );
  }
  netlist net;
  std::vector<uint32_t> node_of( d.max_var + 1, UINT32_MAX );
  for ( uint64_t lit : d.inputs )
  {
    if ( lit < 2 || ( lit & 1 ) )
    {
      throw parse_error( header_line, "invalid input literal " + std::to_string( lit ) );
    }
    node_of[lit >> 1] = net.add_pi();
  }
  std::vector<std::array<uint64_t, 3>> def_of( d.max_var + 1, { 0, 0, 0 } );
  std::vector<int8_t> state( d.max_var + 1, 0 ); // 0 none, 1 pending, 2 done
  for ( uint64_t v = 1; v <= d.max_var; ++v )
  {
    state[v] = node_of[v] != UINT32_MAX ? 2 : 0;
  }
  for ( auto const& a : d.ands )
  {
    uint64_t const v = a[0] >> 1;
    if ( ( a[0] & 1 ) || v == 0 || v > d.max_var || state[v] == 2 || def_of[v][0] != 0 )
    {
      throw parse_error( header_line, "invalid AND definition for literal " +
                                          std::to_string( a[0] ) );
    }
    def_of[v] = a;
  }
  auto build = [&]( auto&& self, uint64_t var ) -> uint32_t {
    if ( var == 0 )
    {
      throw parse_error( header_line, "unsupported construct: constant literal" );
    }
    if ( var > d.max_var )
    {
      throw parse_error( header_line, "literal beyond the declared maximum" );
    }
    if ( state[var] == 2 )
    {
      return node_of[var];
    }
    if ( state[var] == 1 )
    {
      throw parse_error( header_line, "combinational cycle through variable " +
                                          std::to_string( var ) );
    }
    if ( def_of[var][0] == 0 )
    {
      throw parse_error( header_line, "undefined variable " + std::to_string( var ) );
    }
    state[var] = 1;
    uint32_t const a = self( self, def_of[var][1] >> 1 );
    uint32_t const b = self( self, def_of[var][2] >> 1 );
    node_of[var] = net.add_gate(
        gate_kind::and2, { signal( a, ( def_of[var][1] & 1 ) != 0 ),
                           signal( b, ( def_of[var][2] & 1 ) != 0 ) } );
    state[var] = 2;
    return node_of[var];
  };
  for ( uint64_t lit : d.outputs )
  {
    if ( lit < 2 )
    {
      throw parse_error( header_line, "unsupported construct: constant output" );
    }
    uint32_t const node = build( build, lit >> 1 );
    net.add_po( signal( node, ( lit & 1 ) != 0 ) );
  }
  return net;
}

} // namespace detail

/*! \brief Parses an AIGER file; the header keyword picks the dialect. */
inline netlist read_aiger( std::string const& bytes )
{
  std::istringstream in( bytes );
  std::string magic;
  in >> magic;
  detail::aiger_data d{};
  if ( !( in >> d.max_var >> d.num_in >> d.num_latch >> d.num_out >> d.num_and ) )
  {
    throw parse_error( 1, "malformed AIGER header" );
  }

  if ( magic == "aag" )
  {
    for ( uint64_t i = 0; i < d.num_in; ++i )
    {
      uint64_t lit;
      if ( !( in >> lit ) )
      {
        throw parse_error( 2 + i, "missing input literal" );
      }
      d.inputs.push_back( lit );
    }
    if ( d.num_latch != 0 )
    {
      throw parse_error( 1, "unsupported construct: latches" );
    }
    for ( uint64_t i = 0; i < d.num_out; ++i )
    {
      uint64_t lit;
      if ( !( in >> lit ) )
      {
        throw parse_error( 2 + d.num_in + i, "missing output literal" );
      }
      d.outputs.push_back( lit );
    }
    for ( uint64_t i = 0; i < d.num_and; ++i )
    {
      std::array<uint64_t, 3> a{};
      if ( !( in >> a[0] >> a[1] >> a[2] ) )
      {
        throw parse_error( 2 + d.num_in + d.num_out + i, "missing AND line" );
      }
      d.ands.push_back( a );
    }
  }
  else if ( magic == "aig" )
  {
    if ( d.num_latch != 0 )
    {
      throw parse_error( 1, "unsupported construct: latches" );
    }
    for ( uint64_t i = 0; i < d.num_in; ++i )
    {
      d.inputs.push_back( 2 * ( i + 1 ) );
    }
    for ( uint64_t i = 0; i < d.num_out; ++i )
    {
      uint64_t lit;
      if ( !( in >> lit ) )
      {
        throw parse_error( 2 + i, "missing output literal" );
      }
      d.outputs.push_back( lit );
    }
    in.get(); // newline before the binary section
    auto decode = [&]( size_t at ) -> uint64_t {
      uint64_t x = 0;
      int shift = 0;
      while ( true )
      {
        int const ch = in.get();
        if ( ch == EOF )
        {
          throw parse_error( at, "truncated binary AND section" );
        }
        x |= static_cast<uint64_t>( ch & 0x7f ) << shift;
        if ( !( ch & 0x80 ) )
        {
          return x;
        }
        shift += 7;
      }
    };
    for ( uint64_t i = 0; i < d.num_and; ++i )
    {
      uint64_t const lhs = 2 * ( d.num_in + d.num_latch + i + 1 );
      uint64_t const delta0 = decode( 2 + d.num_out + i );
      uint64_t const delta1 = decode( 2 + d.num_out + i );
      if ( delta0 > lhs )
      {
        throw parse_error( 2 + d.num_out + i, "invalid delta encoding" );
      }
      uint64_t const rhs0 = lhs - delta0;
      if ( delta1 > rhs0 )
      {
        throw parse_error( 2 + d.num_out + i, "invalid delta encoding" );
      }
      d.ands.push_back( { lhs, rhs0, rhs0 - delta1 } );
    }
  }
  else
  {
    throw parse_error( 1, "not an AIGER file (expected aag or aig)" );
  }
  return detail::aiger_build( d, 1 );
}

} // namespace sfqmap
