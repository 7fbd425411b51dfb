#include "sgp/io.hpp"

#include <charconv>

namespace sgp {

namespace {

Int parse_int(std::string_view text) {
  Int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail("ParseError", "expected an integer, got '" + std::string(text) + "'");
  return value;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

NumericalSemigroup parse_semigroup(const std::string& text) {
  std::vector<Int> gens = parse_int_list(text);
  if (gens.empty()) fail("ParseError", "empty generator list");
  return NumericalSemigroup::from_generators(gens);
}

RelativeIdeal parse_ideal(const std::string& text, const NumericalSemigroup& parent) {
  if (text == "M") return parent.maximal_ideal();
  if (text == "S") return parent.as_ideal();
  constexpr std::string_view kElems = "elems=";
  constexpr std::string_view kTail = "tail=";
  size_t semi = text.find(';');
  if (!text.starts_with(kElems) || semi == std::string::npos ||
      text.compare(semi + 1, kTail.size(), kTail) != 0)
    fail("ParseError", "ideal syntax is \"M\", \"S\" or \"elems=...;tail=...\"");
  std::vector<Int> elems = parse_int_list(
      std::string_view(text).substr(kElems.size(), semi - kElems.size()));
  Int tail = parse_int(std::string_view(text).substr(semi + 1 + kTail.size()));
  return ideal_from_elements(parent, std::move(elems), tail);
}

LinearPattern parse_pattern(const std::string& text) {
  size_t semi = text.find(';');
  std::vector<Int> coeffs =
      parse_int_list(std::string_view(text).substr(0, semi));
  if (coeffs.empty()) fail("ParseError", "pattern needs at least one coefficient");
  Int constant = semi == std::string::npos
                     ? 0
                     : parse_int(std::string_view(text).substr(semi + 1));
  return {std::move(coeffs), constant};
}

std::string format_pattern(const LinearPattern& p) {
  std::string out;
  for (size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.coefficients()[i]);
  }
  out += ";" + std::to_string(p.constant());
  return out;
}

Json to_json(const ZSet& set) {
  if (!set.cofinite()) fail("ParseError", "only cofinite sets serialize");
  return Json{{"elements", set.elements()}, {"tail", *set.tail()}};
}

Json to_json(const NumericalSemigroup& s) { return to_json(s.zset()); }

Json to_json(const RelativeIdeal& i) { return to_json(i.set()); }

Json to_json(const TailSet& t) {
  Json j{{"scale", t.scale}, {"elements", t.set.elements()}, {"tail", *t.set.tail()}};
  if (t.shift != 0) j["shift"] = t.shift;
  return j;
}

Json to_json(const LinearPattern& p) {
  return Json{{"coeffs", p.coefficients()}, {"const", p.constant()}};
}

Json to_json(const NotableElements& n) {
  return Json{{"multiplicity", n.multiplicity},
              {"frobenius", n.frobenius},
              {"conductor", n.conductor},
              {"genus", n.genus},
              {"gaps", n.gaps},
              {"minimal_generators", n.minimal_generators},
              {"embedding_dimension", n.embedding_dimension},
              {"pseudo_frobenius", n.pseudo_frobenius}};
}

ZSet zset_from_json(const Json& j) {
  return ZSet::with_tail(j.at("elements").get<std::vector<Int>>(), j.at("tail").get<Int>());
}

TailSet tailset_from_json(const Json& j) {
  TailSet t;
  t.scale = j.at("scale").get<Int>();
  t.shift = j.value("shift", Int{0});
  t.set = ZSet::with_tail(j.at("elements").get<std::vector<Int>>(), j.at("tail").get<Int>());
  return t;
}

LinearPattern pattern_from_json(const Json& j) {
  return {j.at("coeffs").get<std::vector<Int>>(), j.at("const").get<Int>()};
}

}  // namespace sgp
