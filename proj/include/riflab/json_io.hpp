#pragma once

#include <string>

#include <json.hpp>

#include "riflab/kernels.hpp"

namespace riflab {

using Json = nlohmann::json;

struct PolyInput {
  BiPoly p;
  /// The (m, n) written in the file, used as the reflection degree.
  Bidegree degree;
};

/// {"m": int, "n": int, "coeffs": [[[re, im], ...], ...]}, row k holds the
/// coefficients of z1^k z2^0 .. z1^k z2^n. Throws Error(parse).
PolyInput poly_from_json(const Json& j);
Json poly_to_json(const BiPoly& p, Bidegree degree);
Json poly_to_json(const BiPoly& p);

/// {"E1": [poly...], "F2": [poly...]}
AglerVectors agler_from_json(const Json& j);
Json agler_to_json(const AglerVectors& v);

Json rational_to_json(const RationalFn& f);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Finite doubles as numbers; infinities and NaN as the strings "inf", "-inf", "nan".
Json real_to_json(double x);
double real_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(parse).
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace riflab
