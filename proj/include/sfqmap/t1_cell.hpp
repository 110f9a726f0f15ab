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
  \file t1_cell.hpp
  \brief T1 pulse-counter cell: output roles and their Boolean functions
*/

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace sfqmap
{

/*! \brief Output roles of an extended T1 cell.
 *
 * The cell counts input pulses arriving at distinct stages. Its readout
 * realizes XOR3 on the sum output and MAJ3 / OR3 on the carry / or
 * outputs; appending an inverter to the latter two yields the negated
 * variants, for up to five simultaneous functions of the same three
 * inputs.
 */
enum class t1_output : uint8_t
{
  sum = 0,
  carry = 1,
  orq = 2,
  ncarry = 3,
  norq = 4
};

inline constexpr uint8_t t1_output_count = 5u;

inline constexpr std::array<std::string_view, t1_output_count> t1_output_names = {
    "SUM", "CARRY", "ORQ", "NCARRY", "NORQ"};

/* 3-variable truth tables, variable 0 on the least-significant bit */
inline constexpr uint8_t tt3_xor3 = 0x96;
inline constexpr uint8_t tt3_maj3 = 0xe8;
inline constexpr uint8_t tt3_or3 = 0xfe;
inline constexpr uint8_t tt3_and3 = 0x80;

/*! \brief Truth table realized by a T1 output under positive input polarity. */
inline constexpr uint8_t t1_output_function( t1_output o )
{
  switch ( o )
  {
  case t1_output::sum:
    return tt3_xor3;
  case t1_output::carry:
    return tt3_maj3;
  case t1_output::orq:
    return tt3_or3;
  case t1_output::ncarry:
    return static_cast<uint8_t>( ~tt3_maj3 );
  case t1_output::norq:
  default:
    return static_cast<uint8_t>( ~tt3_or3 );
  }
}

/*! \brief Applies input negations to a 3-variable truth table.
 *
 * Bit i of `mask` negates variable i: the result satisfies
 * tt'(x) = tt(x ^ mask).
 */
inline constexpr uint8_t tt3_negate_inputs( uint8_t tt, uint8_t mask )
{
  uint8_t out = 0;
  for ( uint8_t m = 0; m < 8; ++m )
  {
    if ( ( tt >> ( m ^ mask ) ) & 1u )
    {
      out |= static_cast<uint8_t>( 1u << m );
    }
  }
  return out;
}

/*! \brief True if the truth table depends on all three variables. */
inline constexpr bool tt3_full_support( uint8_t tt )
{
  for ( uint8_t v = 0; v < 3; ++v )
  {
    bool depends = false;
    for ( uint8_t m = 0; m < 8; ++m )
    {
      const uint8_t flipped = m ^ static_cast<uint8_t>( 1u << v );
      if ( ( ( tt >> m ) & 1u ) != ( ( tt >> flipped ) & 1u ) )
      {
        depends = true;
        break;
      }
    }
    if ( !depends )
    {
      return false;
    }
  }
  return true;
}

} // namespace sfqmap
