#pragma once

// JSON encodings used by the command-line tool. Objects use nlohmann::json's
// default std::map storage, so keys come out sorted and dumps are
// byte-reproducible.

#include <limits>

#include "json.hpp"

#include "hitchin/exactpoly.hpp"

namespace hitchin {

using Json = nlohmann::json;

/// Integer as a JSON number when it fits in 64 bits, otherwise its decimal string.
inline Json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(value));
  return Json(value.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

/// Coefficient array, index = exponent.
inline Json to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

inline IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPoly(std::move(coeffs));
}

/// {"terms": [[p, q, c], ...] sorted by (p, q), "text": "..."}.
inline Json to_json(const BivarPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e.first, e.second, integer_to_json(c)}));
  return Json{{"terms", terms}, {"text", p.to_string()}};
}

}  // namespace hitchin
