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
  \file generators.hpp
  \brief Arithmetic netlist generators for the benchmark harness

  Each full-adder bit is built as an explicit XOR3 cone (two XOR2) for the
  sum and a MAJ3 gate for the carry, exposing exactly one T1 candidate
  per bit.
*/

#pragma once

#include "netlist.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sfqmap
{

namespace detail
{

inline std::pair<signal, signal> full_adder_cones( netlist& net, signal a, signal b, signal c )
{
  uint32_t const x = net.add_gate( gate_kind::xor2, { a, b } );
  uint32_t const s = net.add_gate( gate_kind::xor2, { signal( x ), c } );
  uint32_t const m = net.add_gate( gate_kind::maj3, { a, b, c } );
  return { signal( s ), signal( m ) };
}

inline std::pair<signal, signal> half_adder_cones( netlist& net, signal a, signal b )
{
  uint32_t const s = net.add_gate( gate_kind::xor2, { a, b } );
  uint32_t const c = net.add_gate( gate_kind::and2, { a, b } );
  return { signal( s ), signal( c ) };
}

} // namespace detail

/*! \brief Ripple-carry adder with carry-in: one full-adder cone per bit. */
inline netlist gen_ripple_adder( uint32_t bits )
{
  if ( bits < 1 || bits > 256 )
  {
    throw std::invalid_argument( "gen_ripple_adder: bits must be in [1, 256]" );
  }
  netlist net;
  std::vector<signal> a, b;
  for ( uint32_t i = 0; i < bits; ++i )
  {
    a.emplace_back( net.add_pi() );
  }
  for ( uint32_t i = 0; i < bits; ++i )
  {
    b.emplace_back( net.add_pi() );
  }
  signal carry( net.add_pi() ); // carry-in
  std::vector<signal> sums;
  for ( uint32_t i = 0; i < bits; ++i )
  {
    auto const [s, c] = detail::full_adder_cones( net, a[i], b[i], carry );
    sums.push_back( s );
    carry = c;
  }
  for ( auto s : sums )
  {
    net.add_po( s );
  }
  net.add_po( carry );
  return net;
}

/*! \brief Shift-add array multiplier over AND2 partial products. */
inline netlist gen_array_multiplier( uint32_t bits )
{
  if ( bits < 1 || bits > 32 )
  {
    throw std::invalid_argument( "gen_array_multiplier: bits must be in [1, 32]" );
  }
  netlist net;
  std::vector<signal> a, b;
  for ( uint32_t i = 0; i < bits; ++i )
  {
    a.emplace_back( net.add_pi() );
  }
  for ( uint32_t i = 0; i < bits; ++i )
  {
    b.emplace_back( net.add_pi() );
  }
  std::vector<std::optional<signal>> acc( 2 * bits );
  for ( uint32_t i = 0; i < bits; ++i )
  {
    std::optional<signal> carry;
    for ( uint32_t j = 0; j < bits; ++j )
    {
      uint32_t const pos = i + j;
      signal const pp( net.add_gate( gate_kind::and2, { a[j], b[i] } ) );
      if ( acc[pos] && carry )
      {
        auto const [s, c] = detail::full_adder_cones( net, *acc[pos], pp, *carry );
        acc[pos] = s;
        carry = c;
      }
      else if ( acc[pos] || carry )
      {
        signal const other = acc[pos] ? *acc[pos] : *carry;
        auto const [s, c] = detail::half_adder_cones( net, other, pp );
        acc[pos] = s;
        carry = c;
      }
      else
      {
        acc[pos] = pp;
        carry.reset();
      }
    }
    // ripple the row carry into the accumulator
    uint32_t pos = i + bits;
    while ( carry )
    {
      if ( !acc[pos] )
      {
        acc[pos] = *carry;
        carry.reset();
      }
      else
      {
        auto const [s, c] = detail::half_adder_cones( net, *acc[pos], *carry );
        acc[pos] = s;
        carry = c;
        ++pos;
      }
    }
  }
  for ( auto const& s : acc )
  {
    if ( s )
    {
      net.add_po( *s );
    }
  }
  return net;
}

} // namespace sfqmap
