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
  \file stats_csv.hpp
  \brief Per-run metric rows as CSV
*/

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace sfqmap
{

struct stats_row
{
  std::string benchmark;
  int64_t t1_found{ 0 };
  int64_t t1_used{ 0 };
  int64_t dff_count{ 0 };
  int64_t jj_area{ 0 };
  int64_t depth_cycles{ 0 };
  uint32_t phases{ 1 };
  int64_t runtime_ms{ 0 };
};

inline std::string write_stats( std::vector<stats_row> const& rows )
{
  std::ostringstream os;
  os << "benchmark,t1_found,t1_used,dff_count,jj_area,depth_cycles,phases,runtime_ms\n";
  for ( auto const& r : rows )
  {
    os << r.benchmark << ',' << r.t1_found << ',' << r.t1_used << ',' << r.dff_count << ','
       << r.jj_area << ',' << r.depth_cycles << ',' << r.phases << ',' << r.runtime_ms << '\n';
  }
  return os.str();
}

} // namespace sfqmap
