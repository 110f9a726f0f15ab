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
  \file report_json.hpp
  \brief Validation reports, hazards and counterexamples as JSON
*/

#pragma once

#include "../verify.hpp"

#include <json.hpp>

#include <string>

namespace sfqmap
{

inline std::string write_validation_report( validation_report const& rep )
{
  using json = nlohmann::ordered_json;
  json j;
  j["legal"] = rep.ok();
  json vs = json::array();
  for ( auto const& v : rep.violations )
  {
    json e;
    e["kind"] = std::string( violation_kind_names[static_cast<size_t>( v.kind )] );
    e["location"] = v.location;
    e["details"] = v.details;
    vs.push_back( std::move( e ) );
  }
  j["violations"] = std::move( vs );
  return j.dump( 2 ) + "\n";
}

inline std::string write_equivalence_verdict( equivalence_verdict const& v )
{
  using json = nlohmann::ordered_json;
  json j;
  j["equal"] = v.equal;
  j["vectors_checked"] = v.vectors_checked;
  if ( v.has_counterexample )
  {
    json bits = json::array();
    for ( bool b : v.counterexample )
    {
      bits.push_back( b ? 1 : 0 );
    }
    j["counterexample"] = std::move( bits );
  }
  return j.dump( 2 ) + "\n";
}

inline std::string write_hazards( std::vector<hazard_event> const& hazards )
{
  using json = nlohmann::ordered_json;
  json j = json::array();
  for ( auto const& h : hazards )
  {
    json e;
    e["node"] = h.net.node;
    e["pin"] = std::string( t1_output_names[static_cast<size_t>( h.net.pin )] );
    e["stage"] = h.stage;
    e["details"] = h.detail;
    j.push_back( std::move( e ) );
  }
  return j.dump( 2 ) + "\n";
}

} // namespace sfqmap
