#pragma once

// Text and JSON formats.
//
//   semigroup   "3,5,7"                       (generators)
//   ideal       "M" | "S" | "elems=2,3;tail=3"
//   pattern     "a1,...,an;a0"  e.g. "1,1,-1;0"   (";a0" may be omitted)
//
// Sets serialize as {"elements":[...],"tail":t}; pattern images as
// {"scale":d,"elements":[...],"tail":t} plus a "shift" field when non-zero;
// patterns as {"coeffs":[...],"const":a0}.

#include <string>

#include <json.hpp>

#include "sgp/core.hpp"
#include "sgp/image.hpp"
#include "sgp/pattern.hpp"

namespace sgp {

using Json = nlohmann::ordered_json;

NumericalSemigroup parse_semigroup(const std::string& text);
RelativeIdeal parse_ideal(const std::string& text, const NumericalSemigroup& parent);
LinearPattern parse_pattern(const std::string& text);

std::string format_pattern(const LinearPattern& p);

Json to_json(const ZSet& set);
Json to_json(const NumericalSemigroup& s);
Json to_json(const RelativeIdeal& i);
Json to_json(const TailSet& t);
Json to_json(const LinearPattern& p);
Json to_json(const NotableElements& n);

ZSet zset_from_json(const Json& j);
TailSet tailset_from_json(const Json& j);
LinearPattern pattern_from_json(const Json& j);

}  // namespace sgp
