#pragma once

// KTD text format and JSON result envelopes.
//
// A KTD document is a header line followed by one line per crossing:
//
//   knotoid sphere            | knotoid plane <outer-face>
//   X 0 2 1 1                 (classical; slots counterclockwise, slot 0 first)
//   S 3 1 4 2                 (singular)
//   V ...                     (virtual)
//
// Closed diagrams emitted by the closure maps use the header "knot sphere".
// Blank lines and lines starting with '#' are ignored.

#include "knotoid/diagram.hpp"
#include "knotoid/errors.hpp"
#include "knotoid/laurent.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace knotoid {

namespace detail {

inline bool significant_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline int parse_int_token(const std::string& tok, int line_no, int col) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + tok + "'", line_no, col);
  }
}

}  // namespace detail

inline KnotoidDiagram parse_ktd(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  KnotoidDiagram d;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!detail::significant_line(line)) continue;
    auto toks = detail::tokenize(line);
    if (!header_seen) {
      if (toks.empty() || toks[0] != "knotoid")
        throw parse_error("expected header 'knotoid sphere|plane ...'", line_no, 1);
      if (toks.size() < 2) throw parse_error("missing surface in header", line_no, 1);
      if (toks[1] == "sphere") {
        if (toks.size() != 2) throw parse_error("unexpected tokens after 'sphere'", line_no, 3);
        d.surface = Surface::sphere;
      } else if (toks[1] == "plane") {
        if (toks.size() != 3) throw parse_error("'plane' header needs an outer face id", line_no, 3);
        d.surface = Surface::plane;
        d.outer_face = detail::parse_int_token(toks[2], line_no, 3);
      } else {
        throw parse_error("unknown surface '" + toks[1] + "'", line_no, 2);
      }
      header_seen = true;
      continue;
    }
    if (toks.size() != 5)
      throw parse_error("crossing line needs a kind letter and four slot labels", line_no, 1);
    Crossing c;
    if (toks[0] == "X")
      c.kind = CrossingKind::classical;
    else if (toks[0] == "S")
      c.kind = CrossingKind::singular;
    else if (toks[0] == "V")
      c.kind = CrossingKind::virtual_k;
    else
      throw parse_error("unknown crossing kind '" + toks[0] + "'", line_no, 1);
    for (int i = 0; i < 4; ++i) c.slots[i] = detail::parse_int_token(toks[1 + i], line_no, 2 + i);
    d.crossings.push_back(c);
  }
  if (!header_seen) throw parse_error("empty document", std::max(line_no, 1), 1);

  ValidationReport rep = validate(d);
  if (!rep.ok()) throw invalid_diagram(rep.summary());
  return d;
}

namespace detail {

inline char kind_letter(CrossingKind k) {
  switch (k) {
    case CrossingKind::classical: return 'X';
    case CrossingKind::singular: return 'S';
    default: return 'V';
  }
}

inline std::string emit_crossing_lines(const std::vector<Crossing>& crossings) {
  std::vector<int> order(crossings.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto min_slot = [&crossings](int c) {
    return *std::min_element(crossings[c].slots.begin(), crossings[c].slots.end());
  };
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_slot(a) < min_slot(b); });
  std::string out;
  for (int c : order) {
    out += kind_letter(crossings[c].kind);
    for (int s : crossings[c].slots) out += ' ' + std::to_string(s);
    out += '\n';
  }
  return out;
}

}  // namespace detail

/// Canonical serialization: crossings sorted by smallest incident edge label.
inline std::string emit_ktd(const KnotoidDiagram& d) {
  require_valid(d);
  std::string out = "knotoid ";
  out += d.surface == Surface::sphere ? "sphere" : "plane " + std::to_string(*d.outer_face);
  out += '\n';
  out += detail::emit_crossing_lines(d.crossings);
  return out;
}

inline std::string emit_ktd(const ClosedDiagram& d) {
  require_valid(d);
  return "knot sphere\n" + detail::emit_crossing_lines(d.crossings);
}

// ---------------------------------------------------------------------------
// JSON envelopes
//
// Polynomial results are carried as exponent/coefficient pairs:
//   {"invariant": "f", "variables": ["A"], "terms": [[[10], -1], [[6], 1], ...]}
// Coefficients outside the 64-bit range are emitted as decimal strings.

namespace detail {

inline nlohmann::json bigint_json(const BigInt& c) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (c >= lo && c <= hi) return nlohmann::json(static_cast<std::int64_t>(c));
  return nlohmann::json(c.str());
}

}  // namespace detail

inline nlohmann::json to_json(const std::string& invariant, const Laurent1& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{it->first}, detail::bigint_json(it->second)});
  return {{"invariant", invariant},
          {"variables", {var_name(p.var())}},
          {"terms", terms}};
}

inline nlohmann::json to_json(const std::string& invariant, const Laurent2& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{it->first.first, it->first.second}, detail::bigint_json(it->second)});
  return {{"invariant", invariant}, {"variables", {"A", "u"}}, {"terms", terms}};
}

inline std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace knotoid
