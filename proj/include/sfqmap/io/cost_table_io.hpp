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
  \file cost_table_io.hpp
  \brief JJ cost tables as key=value text, overriding the built-in defaults
*/

#pragma once

#include "../netlist.hpp"
#include "parse_error.hpp"

#include <sstream>
#include <string>

namespace sfqmap
{

/*! \brief Applies `KEY=VALUE` lines on top of the default table.
 *
 * Keys are the gate kind names plus t1_base, inverter_in, inverter_out.
 * Blank lines and `#` comments are ignored.
 */
inline cost_table read_cost_table( std::string const& bytes )
{
  cost_table t = cost_table::defaults();
  std::istringstream in( bytes );
  std::string line;
  size_t line_no = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( auto const h = line.find( '#' ); h != std::string::npos )
    {
      line.resize( h );
    }
    std::string key, value;
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
    {
      std::istringstream ws( line );
      std::string rest;
      if ( ws >> rest )
      {
        throw parse_error( line_no, "expected KEY=VALUE" );
      }
      continue;
    }
    auto trim = []( std::string s ) {
      auto const a = s.find_first_not_of( " \t\r" );
      auto const b = s.find_last_not_of( " \t\r" );
      return a == std::string::npos ? std::string{} : s.substr( a, b - a + 1 );
    };
    key = trim( line.substr( 0, eq ) );
    value = trim( line.substr( eq + 1 ) );
    int32_t v = 0;
    try
    {
      v = std::stoi( value );
    }
    catch ( ... )
    {
      throw parse_error( line_no, "invalid value for " + key );
    }
    if ( v < 0 )
    {
      throw parse_error( line_no, "negative cost for " + key );
    }
    if ( key == "t1_base" )
    {
      t.t1_base = v;
    }
    else if ( key == "inverter_in" )
    {
      t.inverter_in = v;
    }
    else if ( key == "inverter_out" )
    {
      t.inverter_out = v;
    }
    else
    {
      bool known = false;
      for ( size_t k = 0; k < gate_kind_count; ++k )
      {
        if ( gate_kind_names[k] == key )
        {
          t.set( static_cast<gate_kind>( k ), v );
          known = true;
          break;
        }
      }
      if ( !known )
      {
        throw parse_error( line_no, "unknown cost key " + key );
      }
    }
  }
  return t;
}

inline std::string write_cost_table( cost_table const& t )
{
  std::ostringstream os;
  for ( size_t k = 0; k < gate_kind_count; ++k )
  {
    if ( t.gate_cost[k] )
    {
      os << gate_kind_names[k] << "=" << *t.gate_cost[k] << "\n";
    }
  }
  os << "t1_base=" << t.t1_base << "\n";
  os << "inverter_in=" << t.inverter_in << "\n";
  os << "inverter_out=" << t.inverter_out << "\n";
  return os.str();
}

} // namespace sfqmap
