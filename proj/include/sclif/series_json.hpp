#pragma once

#include <stdexcept>
#include <string>

#include "sclif/series.hpp"

namespace sclif {

/// Malformed input: bad JSON, schema violations, bad blade keys or literals.
/// The message names the offending field or position.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Series file schema: {"n": K, "regular": [{"m": deg, "blades": {key: value}}],
/// "principal": [...] (optional)}. Blade keys follow blade_key(); degrees must
/// be unique, indices ascending and within [1, n], values finite.
LaurentSeries parse_series(const std::string& path);
LaurentSeries parse_series_text(const std::string& text);

/// Canonical formatting: two-space indent, entries by ascending degree,
/// all-zero coefficients and zero blade entries omitted. Parsing followed by
/// serializing is byte-stable on canonical files.
std::string serialize_series(const LaurentSeries& s);
std::string serialize_series(const PowerSeries& s);

/// Paravector literals like "1.5+2e1-0.5e3". A bare number is the real part,
/// "eK" selects a generator; scientific-notation exponents are not part of
/// the grammar since "e" binds to basis vectors.
Paravector parse_paravector(const std::string& literal, int n);

}  // namespace sclif
