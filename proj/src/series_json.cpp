#include "sclif/series_json.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

namespace sclif {

namespace {

using nlohmann::json;

int parse_generator_count(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field 'n': expected an integer");
  const int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGenerators)
    throw ParseError("field 'n': expected a value in [1, " +
                     std::to_string(kMaxGenerators) + "], got " + std::to_string(n));
  return n;
}

Multivector parse_blades(const json& entry, int n, const std::string& where) {
  if (!entry.is_object()) throw ParseError(where + ": expected an object");
  Multivector out(n);
  for (const auto& [key, value] : entry.items()) {
    Mask mask;
    try {
      mask = parse_blade_key(key, n);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
    if (!value.is_number())
      throw ParseError(where + "['" + key + "']: expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x))
      throw ParseError(where + "['" + key + "']: value must be finite");
    out[mask] = x;
  }
  return out;
}

// Entries {"m": degree, "blades": {...}} -> coefficient list indexed from
// min_degree, rejecting duplicates and out-of-range degrees.
std::vector<Multivector> parse_part(const json& arr, int n, int min_degree,
                                    const std::string& where) {
  if (!arr.is_array()) throw ParseError("field '" + where + "': expected a list");
  std::map<int, Multivector> by_degree;
  std::size_t idx = 0;
  for (const auto& entry : arr) {
    const std::string at = where + "[" + std::to_string(idx++) + "]";
    if (!entry.is_object()) throw ParseError(at + ": expected an object");
    for (const auto& [key, value] : entry.items()) {
      (void)value;
      if (key != "m" && key != "blades")
        throw ParseError(at + ": unknown field '" + key + "'");
    }
    if (!entry.contains("m") || !entry["m"].is_number_integer())
      throw ParseError(at + ".m: expected an integer degree");
    const int m = entry["m"].get<int>();
    if (m < min_degree)
      throw ParseError(at + ".m: degree must be >= " + std::to_string(min_degree));
    if (by_degree.count(m)) throw ParseError(at + ".m: duplicate degree " + std::to_string(m));
    if (!entry.contains("blades"))
      throw ParseError(at + ": missing field 'blades'");
    by_degree.emplace(m, parse_blades(entry["blades"], n, at + ".blades"));
  }
  std::vector<Multivector> out;
  if (!by_degree.empty()) {
    out.assign(by_degree.rbegin()->first - min_degree + 1, Multivector(n));
    for (const auto& [m, coeff] : by_degree) out[m - min_degree] = coeff;
  }
  return out;
}

json blades_to_json(const Multivector& v) {
  json out = json::object();
  for (Mask m = 0; m < v.size(); ++m)
    if (v[m] != 0.0) out[blade_key(m)] = v[m];
  return out;
}

json part_to_json(const std::vector<Multivector>& coeffs, int min_degree) {
  json arr = json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].norm_squared() == 0.0) continue;
    json entry = json::object();
    entry["m"] = static_cast<int>(i) + min_degree;
    entry["blades"] = blades_to_json(coeffs[i]);
    arr.push_back(std::move(entry));
  }
  return arr;
}

LaurentSeries from_json(const json& j) {
  if (!j.is_object()) throw ParseError("top level: expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "n" && key != "regular" && key != "principal")
      throw ParseError("top level: unknown field '" + key + "'");
  }
  const int n = parse_generator_count(j);
  if (!j.contains("regular")) throw ParseError("missing field 'regular'");
  std::vector<Multivector> regular = parse_part(j["regular"], n, 0, "regular");
  std::vector<Multivector> principal;
  if (j.contains("principal")) principal = parse_part(j["principal"], n, 1, "principal");
  PowerSeries reg = regular.empty() ? PowerSeries(n) : PowerSeries(std::move(regular));
  return LaurentSeries(std::move(reg), std::move(principal), 0.0,
                       std::numeric_limits<double>::infinity());
}

}  // namespace

LaurentSeries parse_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_series_text(text);
}

LaurentSeries parse_series_text(const std::string& text) {
  // The parser keeps the last of two duplicate object keys silently, so
  // duplicates ("blades" with the same key twice, say) are rejected from a
  // callback while the events stream by.
  std::vector<std::set<std::string>> scopes;
  const auto reject_duplicates = [&scopes](int, json::parse_event_t event,
                                           json& parsed) {
    if (event == json::parse_event_t::object_start) {
      scopes.emplace_back();
    } else if (event == json::parse_event_t::object_end) {
      scopes.pop_back();
    } else if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!scopes.back().insert(key).second)
        throw ParseError("duplicate key '" + key + "'");
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text, reject_duplicates);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  } catch (const json::exception& e) {
    // Covers number overflow (1e999 and friends) and other non-positional
    // rejections; the message names the offending token.
    throw ParseError(std::string("JSON error: ") + e.what());
  }
  return from_json(j);
}

std::string serialize_series(const LaurentSeries& s) {
  json j;
  j["n"] = s.generators();
  j["regular"] = part_to_json(s.regular().coefficients(), 0);
  if (s.has_principal()) j["principal"] = part_to_json(s.principal(), 1);
  return j.dump(2) + "\n";
}

std::string serialize_series(const PowerSeries& s) {
  return serialize_series(
      LaurentSeries(s, {}, 0.0, std::numeric_limits<double>::infinity()));
}

Paravector parse_paravector(const std::string& literal, int n) {
  if (n < 1 || n > kMaxGenerators)
    throw ParseError("paravector literal: bad generator count " + std::to_string(n));
  double x0 = 0.0;
  std::vector<double> vec(n, 0.0);
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) {
    throw ParseError("paravector literal '" + literal + "' at position " +
                     std::to_string(pos) + ": " + why);
  };
  while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos])))
    ++pos;
  if (pos == literal.size()) fail("empty literal");
  bool first = true;
  while (pos < literal.size()) {
    double sign = 1.0;
    if (literal[pos] == '+' || literal[pos] == '-') {
      if (literal[pos] == '-') sign = -1.0;
      ++pos;
      while (pos < literal.size() &&
             std::isspace(static_cast<unsigned char>(literal[pos])))
        ++pos;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    // plain decimal number, no exponent ('e' introduces a basis vector)
    std::size_t start = pos;
    while (pos < literal.size() &&
           (std::isdigit(static_cast<unsigned char>(literal[pos])) || literal[pos] == '.'))
      ++pos;
    double mag = 1.0;
    const std::string digits = literal.substr(start, pos - start);
    if (!digits.empty()) {
      try {
        std::size_t used = 0;
        mag = std::stod(digits, &used);
        if (used != digits.size()) fail("bad number '" + digits + "'");
      } catch (const std::exception&) {
        fail("bad number '" + digits + "'");
      }
    }
    if (pos < literal.size() && literal[pos] == 'e') {
      ++pos;
      start = pos;
      while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos])))
        ++pos;
      if (start == pos) fail("expected a generator index after 'e'");
      const int idx = std::stoi(literal.substr(start, pos - start));
      if (idx < 1 || idx > n)
        fail("generator index " + std::to_string(idx) + " out of [1, " +
             std::to_string(n) + "]");
      vec[idx - 1] += sign * mag;
    } else {
      if (digits.empty()) fail("expected a number or a basis term");
      x0 += sign * mag;
    }
    first = false;
    while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos])))
      ++pos;
  }
  return Paravector(x0, std::move(vec));
}

}  // namespace sclif
