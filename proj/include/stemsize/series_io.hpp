// SPDX-License-Identifier: Apache-2.0
//
// JSON and CSV forms of TruncatedSeries. Coefficients travel as decimal
// strings because they outgrow 64 bits.

#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stemsize/series.hpp"

namespace stemsize {

inline nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  return {{"trunc", s.trunc()}, {"coeffs", std::move(coeffs)}};
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("trunc") || !j.contains("coeffs")) {
    throw validation_error("series JSON needs \"trunc\" and \"coeffs\"");
  }
  const auto trunc = j.at("trunc").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != trunc + 1) {
    throw validation_error("series JSON: coeffs must have trunc + 1 entries");
  }
  std::vector<bigint> c;
  c.reserve(arr.size());
  for (const auto& v : arr) {
    const auto text = v.get<std::string>();
    bigint x;
    if (text.empty() || x.set_str(text, 10) != 0) {
      throw validation_error("series JSON: bad decimal coefficient \"" + text +
                             "\"");
    }
    c.push_back(std::move(x));
  }
  return TruncatedSeries(std::move(c));
}

inline void write_csv(std::ostream& os, const TruncatedSeries& s) {
  os << "n,coeff\n";
  for (std::size_t n = 0; n <= s.trunc(); ++n) {
    os << n << ',' << s[n].get_str() << '\n';
  }
}

/// Shortest decimal form that round-trips, for stable text output.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace stemsize
