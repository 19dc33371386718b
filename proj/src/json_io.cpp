#include "riflab/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace riflab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::parse, what); }

int read_degree(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
  const int v = j[key].get<int>();
  if (v < 0) bad(std::string("negative degree '") + key + "'");
  return v;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({real_to_json(z.real()), real_to_json(z.imag())}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) bad("complex number must be [re, im]");
  return {real_from_json(j[0]), real_from_json(j[1])};
}

Json real_to_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x + 0.0;  // no negative zeros in output
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  bad("expected a number");
}

PolyInput poly_from_json(const Json& j) {
  if (!j.is_object()) bad("polynomial must be a JSON object");
  const int m = read_degree(j, "m"), n = read_degree(j, "n");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("missing array field 'coeffs'");
  const auto& rows = j["coeffs"];
  if (rows.size() != static_cast<std::size_t>(m + 1)) bad("'coeffs' must have m + 1 rows");
  Grid g(m + 1, std::vector<Complex>(n + 1));
  for (int k = 0; k <= m; ++k) {
    if (!rows[k].is_array() || rows[k].size() != static_cast<std::size_t>(n + 1)) bad("each row must have n + 1 entries");
    for (int l = 0; l <= n; ++l) g[k][l] = complex_from_json(rows[k][l]);
  }
  return {BiPoly(g), Bidegree{m, n}};
}

Json poly_to_json(const BiPoly& p, Bidegree d) {
  Json rows = Json::array();
  for (int k = 0; k <= d.m; ++k) {
    Json row = Json::array();
    for (int l = 0; l <= d.n; ++l) row.push_back(complex_to_json(p.coeff(k, l)));
    rows.push_back(std::move(row));
  }
  return Json{{"m", d.m}, {"n", d.n}, {"coeffs", std::move(rows)}};
}

Json poly_to_json(const BiPoly& p) { return poly_to_json(p, p.bidegree()); }

AglerVectors agler_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("E1") || !j.contains("F2") || !j["E1"].is_array() || !j["F2"].is_array())
    bad("Agler vectors need arrays 'E1' and 'F2'");
  AglerVectors v;
  for (const auto& q : j["E1"]) v.E1.push_back(poly_from_json(q).p);
  for (const auto& q : j["F2"]) v.F2.push_back(poly_from_json(q).p);
  return v;
}

Json agler_to_json(const AglerVectors& v) {
  Json e = Json::array(), f = Json::array();
  for (const auto& q : v.E1) e.push_back(poly_to_json(q));
  for (const auto& q : v.F2) f.push_back(poly_to_json(q));
  return Json{{"E1", std::move(e)}, {"F2", std::move(f)}};
}

Json rational_to_json(const RationalFn& f) { return Json{{"num", poly_to_json(f.num)}, {"den", poly_to_json(f.den)}}; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace riflab
