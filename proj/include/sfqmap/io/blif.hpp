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
  \file blif.hpp
  \brief BLIF reader: .model/.inputs/.outputs/.names/.end with cubes of
  at most three inputs

  Cube don't-cares are expanded at parse time, so each .names becomes an
  exact truth table that is synthesized over the gate basis (single gate
  where one fits, Shannon cofactoring otherwise). Latches and constant
  covers are unsupported.
*/

#pragma once

#include "../netlist.hpp"
#include "parse_error.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace sfqmap
{

namespace detail
{

struct blif_names
{
  std::vector<std::string> inputs;
  std::string output;
  uint16_t on_set{ 0 }; // truth table over up to 3 inputs, expanded
  size_t line{ 0 };
};

/* synthesizes a k-variable truth table over fanin signals */
inline signal synth_tt( netlist& net, uint16_t tt, std::vector<signal> const& ins, size_t line )
{
  size_t const k = ins.size();
  uint16_t const full = static_cast<uint16_t>( ( 1u << ( 1u << k ) ) - 1u );
  tt &= full;
  if ( tt == 0 || tt == full )
  {
    throw parse_error( line, "unsupported construct: constant cover" );
  }
  // drop inputs the cover does not depend on
  {
    std::vector<signal> support_ins;
    uint16_t reduced = 0;
    std::vector<size_t> support;
    for ( size_t v = 0; v < k; ++v )
    {
      bool depends = false;
      for ( uint16_t m = 0; m < ( 1u << k ) && !depends; ++m )
      {
        uint16_t const flipped = m ^ static_cast<uint16_t>( 1u << v );
        depends = ( ( tt >> m ) & 1u ) != ( ( tt >> flipped ) & 1u );
      }
      if ( depends )
      {
        support.push_back( v );
        support_ins.push_back( ins[v] );
      }
    }
    if ( support.size() < k )
    {
      for ( uint16_t m = 0; m < ( 1u << support.size() ); ++m )
      {
        uint16_t big = 0;
        for ( size_t j = 0; j < support.size(); ++j )
        {
          if ( ( m >> j ) & 1u )
          {
            big |= static_cast<uint16_t>( 1u << support[j] );
          }
        }
        if ( ( tt >> big ) & 1u )
        {
          reduced |= static_cast<uint16_t>( 1u << m );
        }
      }
      return synth_tt( net, reduced, support_ins, line );
    }
  }
  if ( k == 1 )
  {
    return tt == 0b10 ? ins[0] : !ins[0];
  }
  if ( k == 2 )
  {
    struct base
    {
      gate_kind kind;
      uint16_t tt;
    };
    static constexpr std::array<base, 3> bases{ { { gate_kind::and2, 0b1000 },
                                                  { gate_kind::or2, 0b1110 },
                                                  { gate_kind::xor2, 0b0110 } } };
    for ( auto const& b : bases )
    {
      for ( uint8_t cfg = 0; cfg < 8; ++cfg )
      {
        uint16_t t = 0;
        for ( uint8_t m = 0; m < 4; ++m )
        {
          uint8_t const mm = m ^ ( cfg & 3 );
          uint8_t bit = ( b.tt >> mm ) & 1u;
          bit ^= ( cfg >> 2 ) & 1u;
          t |= static_cast<uint16_t>( bit << m );
        }
        if ( t == tt )
        {
          uint32_t const g = net.add_gate(
              b.kind, { signal( ins[0].node, ins[0].complemented ^ ( ( cfg >> 0 ) & 1 ),
                                ins[0].pin ),
                        signal( ins[1].node, ins[1].complemented ^ ( ( cfg >> 1 ) & 1 ),
                                ins[1].pin ) } );
          return signal( g, ( cfg >> 2 ) & 1 );
        }
      }
    }
    throw parse_error( line, "internal: unreachable 2-input cover" );
  }
  // k == 3: a single MAJ3 under input/output negation, else Shannon on x2
  for ( uint8_t cfg = 0; cfg < 16; ++cfg )
  {
    uint16_t t = 0;
    for ( uint8_t m = 0; m < 8; ++m )
    {
      uint8_t const mm = m ^ ( cfg & 7 );
      uint8_t bit = ( tt3_maj3 >> mm ) & 1u;
      bit ^= ( cfg >> 3 ) & 1u;
      t |= static_cast<uint16_t>( bit << m );
    }
    if ( t == tt )
    {
      uint32_t const g = net.add_gate(
          gate_kind::maj3,
          { signal( ins[0].node, ins[0].complemented ^ ( ( cfg >> 0 ) & 1 ), ins[0].pin ),
            signal( ins[1].node, ins[1].complemented ^ ( ( cfg >> 1 ) & 1 ), ins[1].pin ),
            signal( ins[2].node, ins[2].complemented ^ ( ( cfg >> 2 ) & 1 ), ins[2].pin ) } );
      return signal( g, ( cfg >> 3 ) & 1 );
    }
  }
  uint16_t const f0 = tt & 0x0f;
  uint16_t const f1 = ( tt >> 4 ) & 0x0f;
  std::vector<signal> const sub{ ins[0], ins[1] };
  signal const c = ins[2];
  if ( f0 == f1 )
  {
    return synth_tt( net, f0, sub, line );
  }
  if ( f0 == 0 )
  {
    signal const hi = f1 == 0x0f ? c : signal( net.add_gate( gate_kind::and2,
                                                             { c, synth_tt( net, f1, sub, line ) } ) );
    return hi;
  }
  if ( f1 == 0 )
  {
    signal const lo = f0 == 0x0f
                          ? !c
                          : signal( net.add_gate( gate_kind::and2,
                                                  { !c, synth_tt( net, f0, sub, line ) } ) );
    return lo;
  }
  if ( f0 == 0x0f )
  {
    return signal( net.add_gate( gate_kind::or2, { !c, synth_tt( net, f1, sub, line ) } ) );
  }
  if ( f1 == 0x0f )
  {
    return signal( net.add_gate( gate_kind::or2, { c, synth_tt( net, f0, sub, line ) } ) );
  }
  signal const lo = synth_tt( net, f0, sub, line );
  signal const hi = synth_tt( net, f1, sub, line );
  uint32_t const a0 = net.add_gate( gate_kind::and2, { !c, lo } );
  uint32_t const a1 = net.add_gate( gate_kind::and2, { c, hi } );
  return signal( net.add_gate( gate_kind::or2, { signal( a0 ), signal( a1 ) } ) );
}

} // namespace detail

/*! \brief Parses the BLIF subset into a netlist. */
inline netlist read_blif( std::string const& bytes )
{
  std::istringstream in( bytes );
  size_t line_no = 0;

  std::vector<std::pair<std::string, size_t>> input_names;
  std::vector<std::pair<std::string, size_t>> output_names;
  std::vector<detail::blif_names> tables;
  bool saw_model = false, saw_end = false;

  // logical lines with backslash continuations
  auto next_line = [&]( std::string& out ) -> bool {
    out.clear();
    std::string part;
    while ( std::getline( in, part ) )
    {
      ++line_no;
      if ( auto const h = part.find( '#' ); h != std::string::npos )
      {
        part.resize( h );
      }
      while ( !part.empty() && ( part.back() == '\r' || part.back() == ' ' || part.back() == '\t' ) )
      {
        part.pop_back();
      }
      if ( !part.empty() && part.back() == '\\' )
      {
        part.pop_back();
        out += part + " ";
        continue;
      }
      out += part;
      if ( !out.empty() )
      {
        return true;
      }
      out.clear();
    }
    return false;
  };
  auto tokens_of = []( std::string const& s ) {
    std::istringstream ts( s );
    std::vector<std::string> t;
    std::string w;
    while ( ts >> w )
    {
      t.push_back( w );
    }
    return t;
  };

  std::string logical;
  detail::blif_names* open_table = nullptr;
  std::vector<std::pair<std::string, uint8_t>> raw_cubes; // owned by open table
  auto finish_table = [&]() {
    if ( !open_table )
    {
      return;
    }
    size_t const k = open_table->inputs.size();
    bool out_value = true;
    bool first = true;
    uint16_t on = 0;
    for ( auto const& [pattern, val] : raw_cubes )
    {
      if ( first )
      {
        out_value = val != 0;
        first = false;
      }
      else if ( ( val != 0 ) != out_value )
      {
        throw parse_error( open_table->line, "mixed output values in one cover" );
      }
      for ( uint16_t m = 0; m < ( 1u << k ); ++m )
      {
        bool match = true;
        for ( size_t i = 0; i < k && match; ++i )
        {
          char const ch = pattern[i];
          bool const bit = ( m >> i ) & 1u;
          match = ch == '-' || ( ch == '1' ) == bit;
        }
        if ( match )
        {
          on |= static_cast<uint16_t>( 1u << m );
        }
      }
    }
    if ( raw_cubes.empty() )
    {
      throw parse_error( open_table->line, "unsupported construct: constant cover" );
    }
    if ( !out_value )
    {
      on = static_cast<uint16_t>( ~on & ( ( 1u << ( 1u << k ) ) - 1u ) );
    }
    open_table->on_set = on;
    open_table = nullptr;
    raw_cubes.clear();
  };

  while ( next_line( logical ) )
  {
    auto const tok = tokens_of( logical );
    if ( tok.empty() )
    {
      continue;
    }
    if ( tok[0][0] == '.' )
    {
      finish_table();
    }
    if ( tok[0] == ".model" )
    {
      saw_model = true;
    }
    else if ( tok[0] == ".inputs" )
    {
      for ( size_t i = 1; i < tok.size(); ++i )
      {
        input_names.emplace_back( tok[i], line_no );
      }
    }
    else if ( tok[0] == ".outputs" )
    {
      for ( size_t i = 1; i < tok.size(); ++i )
      {
        output_names.emplace_back( tok[i], line_no );
      }
    }
    else if ( tok[0] == ".names" )
    {
      if ( tok.size() < 2 )
      {
        throw parse_error( line_no, ".names without an output" );
      }
      if ( tok.size() > 5 )
      {
        throw parse_error( line_no, "unsupported construct: cover with more than 3 inputs" );
      }
      detail::blif_names t;
      t.inputs.assign( tok.begin() + 1, tok.end() - 1 );
      t.output = tok.back();
      t.line = line_no;
      tables.push_back( std::move( t ) );
      open_table = &tables.back();
    }
    else if ( tok[0] == ".latch" )
    {
      throw parse_error( line_no, "unsupported construct: latches" );
    }
    else if ( tok[0] == ".end" )
    {
      saw_end = true;
      break;
    }
    else if ( tok[0][0] == '.' )
    {
      throw parse_error( line_no, "unsupported construct: " + tok[0] );
    }
    else
    {
      if ( !open_table )
      {
        throw parse_error( line_no, "cube outside a .names cover" );
      }
      if ( open_table->inputs.empty() )
      {
        throw parse_error( line_no, "unsupported construct: constant cover" );
      }
      if ( tok.size() != 2 || tok[0].size() != open_table->inputs.size() ||
           tok[1].size() != 1 || ( tok[1][0] != '0' && tok[1][0] != '1' ) )
      {
        throw parse_error( line_no, "malformed cube" );
      }
      raw_cubes.emplace_back( tok[0], tok[1][0] == '1' ? 1 : 0 );
    }
  }
  finish_table();
  if ( !saw_model )
  {
    throw parse_error( 1, "missing .model" );
  }
  if ( !saw_end )
  {
    throw parse_error( line_no, "missing .end" );
  }

  netlist net;
  std::map<std::string, signal> sig_of;
  for ( auto const& [name, ln] : input_names )
  {
    if ( sig_of.count( name ) )
    {
      throw parse_error( ln, "duplicate input " + name );
    }
    sig_of[name] = signal( net.add_pi() );
  }
  std::map<std::string, size_t> table_of;
  for ( size_t i = 0; i < tables.size(); ++i )
  {
    if ( sig_of.count( tables[i].output ) || table_of.count( tables[i].output ) )
    {
      throw parse_error( tables[i].line, "redefinition of " + tables[i].output );
    }
    table_of[tables[i].output] = i;
  }
  std::vector<int8_t> state( tables.size(), 0 );
  auto resolve = [&]( auto&& self, std::string const& name, size_t from_line ) -> signal {
    if ( auto const it = sig_of.find( name ); it != sig_of.end() )
    {
      return it->second;
    }
    auto const it = table_of.find( name );
    if ( it == table_of.end() )
    {
      throw parse_error( from_line, "undefined signal " + name );
    }
    auto const& t = tables[it->second];
    if ( state[it->second] == 1 )
    {
      throw parse_error( t.line, "combinational cycle through " + name );
    }
    state[it->second] = 1;
    std::vector<signal> ins;
    for ( auto const& i : t.inputs )
    {
      ins.push_back( self( self, i, t.line ) );
    }
    signal const s = detail::synth_tt( net, t.on_set, ins, t.line );
    state[it->second] = 2;
    sig_of[name] = s;
    return s;
  };
  for ( auto const& [name, ln] : output_names )
  {
    net.add_po( resolve( resolve, name, ln ) );
  }
  return net;
}

} // namespace sfqmap
