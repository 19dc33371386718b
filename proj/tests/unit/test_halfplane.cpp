#include <doctest.h>

#include <cmath>
#include <random>

#include "riflab/halfplane.hpp"
#include "riflab/registry.hpp"

using namespace riflab;

TEST_SUITE("halfplane") {

TEST_CASE("Cayley maps") {
  const Complex i(0, 1);
  CHECK(std::abs(cayley(i, Cayley::beta)) < 1e-16);
  CHECK(std::abs(cayley(0.0, Cayley::alpha) - i) < 1e-16);
  CHECK(std::abs(cayley(0.0, Cayley::alpha_tilde) - i) < 1e-16);
  CHECK_THROWS_AS(cayley(1.0, Cayley::alpha), Error);
  CHECK_THROWS_AS(cayley(-1.0, Cayley::alpha_tilde), Error);
  CHECK_THROWS_AS(cayley(-i, Cayley::beta), Error);
  CHECK_THROWS_AS(cayley(-i, Cayley::beta_tilde), Error);
}

TEST_CASE("Pick transforms") {
  const auto& fav = registry_entry("favorite");
  const auto& psi = registry_entry("psi");
  CHECK(same_rational(pick_transform(fav.rif()).f, *fav.expected.pick));
  CHECK(same_rational(pick_transform(psi.rif()).f, *psi.expected.pick));
  CHECK_FALSE(same_rational(pick_transform(psi.rif()).f, *fav.expected.pick));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-4, 4), y(0.05, 4);
  for (const auto& e : registry()) {
    const PickFn f = pick_transform(e.rif());
    for (int k = 0; k < 50; ++k) {
      const Complex w1(x(rng), y(rng)), w2(x(rng), y(rng));
      const Complex a = f(w1, w2), b = f.composed(w1, w2);
      CHECK(std::abs(a - b) < 1e-10 * std::abs(b) + 1e-12);
      CHECK(a.imag() >= -1e-10);
    }
  }
}

TEST_CASE("phase and the point at infinity") {
  const Rif fav = registry_entry("favorite").rif();
  // phi tends to -1 at (1,1), so f(is, is) = is blows up; with phase -1 the
  // transform vanishes there instead.
  const PickFn f = pick_transform(fav);
  CHECK(std::abs(f(Complex(0, 1e3), Complex(0, 1e3)) - Complex(0, 1e3)) < 1e-9);
  const PickFn g = pick_transform(fav, -1.0);
  double prev = 1e300;
  for (double s : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const Complex w = -1.0 / Complex(0, s);
    const double v = std::abs(g(w, w));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-3);
  CHECK_THROWS_AS(pick_transform(fav, 2.0), Error);
}

TEST_CASE("level curves") {
  const Rif fav = registry_entry("favorite").rif();
  const LevelCurve line = trace_level_curve(pick_transform(fav), 1.0, 1.0, 1.0);
  CHECK(line.terminated_reason == TraceEnd::reached_bound);
  for (const auto& v : line.points) CHECK(std::abs(v.x + v.y - 2.0) < 1e-10);

  const PickFn f = pick_transform(registry_entry("psi").rif());
  const LevelCurve c = trace_level_curve(f, 2.0, -1.09, 0.5);
  CHECK(c.terminated_reason == TraceEnd::reached_bound);
  REQUIRE(c.points.size() > 10);
  bool monotone = true;
  for (std::size_t i = 1; i < c.points.size(); ++i)
    monotone = monotone && c.points[i].x > c.points[i - 1].x && c.points[i].y < c.points[i - 1].y;
  CHECK(monotone);
  for (const auto& v : c.points) {
    CHECK(v.residual < 1e-10);
    CHECK(v.y < 0.0);
  }
  const auto& last = c.points.back();
  CHECK(std::max(std::abs(last.x), std::abs(last.y)) > 1e3);
  CHECK(std::hypot(-1.0 / last.x, -1.0 / last.y) < 3e-3);

  CHECK_THROWS_AS(trace_level_curve(f, 2.0, -1.09, std::nan("")), Error);
  CHECK_THROWS_AS(trace_level_curve(f, INFINITY, -1.09, 0.5), Error);
}

}
