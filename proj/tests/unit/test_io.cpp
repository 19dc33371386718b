#include <doctest.h>

#include <cmath>

#include "riflab/registry.hpp"
#include "riflab/report.hpp"

using namespace riflab;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("polynomial JSON") {
  const Json j = parse_json(R"({"m": 1, "n": 1, "coeffs": [[[2, 0], [-1, 0]], [[-1, 0], [0, 0]]]})");
  const PolyInput in = poly_from_json(j);
  CHECK(in.p == BiPoly(Grid{{2, -1}, {-1, 0}}));
  CHECK(in.degree == Bidegree{1, 1});
  CHECK(poly_to_json(in.p, in.degree) == j);

  const PolyInput padded = poly_from_json(parse_json(R"({"m": 1, "n": 1, "coeffs": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]})"));
  CHECK(padded.p.bidegree() == Bidegree{0, 0});
  CHECK(padded.degree == Bidegree{1, 1});
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { parse_json("{\"m\": 1,"); }) == ErrorCode::parse);
  CHECK(code_of([] { poly_from_json(parse_json(R"({"m": 1, "n": 0, "coeffs": [[[1, 0]]]})")); }) == ErrorCode::parse);
  CHECK(code_of([] { poly_from_json(parse_json(R"({"m": -1, "n": 0, "coeffs": []})")); }) == ErrorCode::parse);
  CHECK(code_of([] { poly_from_json(parse_json(R"({"m": 0, "n": 0, "coeffs": [[[1, 0, 3]]]})")); }) == ErrorCode::parse);
  CHECK(code_of([] { agler_from_json(parse_json(R"({"E1": []})")); }) == ErrorCode::parse);
}

TEST_CASE("non-finite reals") {
  CHECK(real_to_json(INFINITY) == "inf");
  CHECK(std::isinf(real_from_json(Json("inf"))));
  CHECK(std::signbit(real_to_json(-0.0).get<double>()) == false);
}

TEST_CASE("Agler JSON round trip") {
  const AglerVectors v = *registry_entry("psi").expected.agler;
  const AglerVectors w = agler_from_json(agler_to_json(v));
  REQUIRE(w.E1.size() == 2);
  REQUIRE(w.F2.size() == 1);
  CHECK(w.E1[1] == v.E1[1]);
  CHECK(w.F2[0] == v.F2[0]);
}

TEST_CASE("registry") {
  CHECK(registry().size() == 5);
  for (const char* n : {"favorite", "amy", "psi", "continuous", "monomial"}) {
    const auto& e = registry_entry(n);
    CHECK_NOTHROW(e.rif());
    CHECK(e.expected.K1);
    CHECK_FALSE(e.expected.K1->note.empty());
    CHECK(e.expected.hp_threshold);
  }
  CHECK_THROWS_AS(registry_entry("nope"), Error);
}

TEST_CASE("report round trip is byte-stable") {
  const auto& e = registry_entry("favorite");
  AnalyzeConfig cfg;
  cfg.h1 = false;
  cfg.max_order = 64;
  const AnalysisReport r = analyze({e.p, e.degree}, e.name, e.expected.agler, cfg);
  const std::string a = to_json(r).dump(2);
  const std::string b = to_json(report_from_json(parse_json(a))).dump(2);
  CHECK(a == b);
  CHECK(parse_json(a)["schema"] == 1);
  CHECK(r.K1 == doctest::Approx(2.0));
  CHECK(r.hp_threshold_1 == doctest::Approx(1.5));

  const AnalysisReport again = analyze({e.p, e.degree}, e.name, e.expected.agler, cfg);
  CHECK(to_json(again).dump(2) == a);

  CHECK(code_of([] { report_from_json(parse_json(R"({"schema": 2})")); }) == ErrorCode::parse);
  CHECK(code_of([] { report_from_json(parse_json(R"({"schema": 1})")); }) == ErrorCode::parse);
}

}
