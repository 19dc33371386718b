#include <doctest.h>

#include <cmath>
#include <random>

#include "riflab/rif.hpp"
#include "riflab/roots1.hpp"

using namespace riflab;

namespace {

const BiPoly kFav(Grid{{2, -1}, {-1, 0}});
const BiPoly kAmy(Grid{{4, -3, 1}, {-1, -1, 0}});
const BiPoly kPsi(Grid{{2, 0}, {0, -1}, {0, -1}});
const BiPoly kCont(Grid{{3, -1}, {-1, 0}});

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_SUITE("rif") {

TEST_CASE("construction") {
  const Rif fav = make_rif(kFav);
  CHECK(fav.ptilde() == BiPoly(Grid{{0, -1}, {-1, 2}}));
  const Rif amy = make_rif(kAmy);
  // 4 z1 z2^2 - z2^2 - 3 z1 z2 - z2 + z1
  CHECK(amy.ptilde() == BiPoly(Grid{{0, -1, -1}, {1, -3, 4}}));
  CHECK(amy.degree() == Bidegree{1, 2});
  const Rif mono = make_rif(BiPoly::constant(1), Bidegree{1, 1});
  CHECK(mono.ptilde() == BiPoly::monomial(1, 1));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { make_rif(BiPoly(Grid{{1}, {-2}})); }) == ErrorCode::unstable_denominator);
  CHECK(code_of([] { make_rif(BiPoly(Grid{{0}, {1}})); }) == ErrorCode::zero_constant_term);
  CHECK(code_of([] { make_rif(BiPoly(Bidegree{1, 1})); }) == ErrorCode::zero_polynomial);
  CHECK(code_of([] { make_rif(kFav, Bidegree{0, 1}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("evaluation") {
  const Rif fav = make_rif(kFav);
  CHECK(std::abs(eval_phi(fav, 0.0, 0.0)) == 0.0);
  const Complex i(0, 1);
  const Complex v = eval_phi(fav, i, i);
  CHECK(std::abs(v - (-2.0 - 2.0 * i) / (2.0 - 2.0 * i)) < 1e-15);
  CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
  CHECK(std::abs(eval_phi(make_rif(kCont), 1.0, 1.0) - 1.0) < 1e-15);
  CHECK(code_of([&] { eval_phi(fav, 1.0, 1.0); }) == ErrorCode::denominator_vanishes);
}

TEST_CASE("derivatives") {
  const Rif mono = make_rif(BiPoly::constant(1), Bidegree{1, 1});
  const RationalFn d = partial_derivative(mono, Axis::z1);
  CHECK(std::abs(d(0.3, 0.7) - 0.7) < 1e-15);

  // d psi / d z2 = -z1 (z1 - 1)^2 / p^2
  const Rif psi = make_rif(kPsi);
  const BiPoly expect = -1.0 * (BiPoly::monomial(1, 0) * BiPoly(Grid{{-1}, {1}}) * BiPoly(Grid{{-1}, {1}}));
  CHECK((psi.deriv_num(Axis::z2) - expect).max_abs() < 1e-14);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  const double h = 1e-5;
  for (const BiPoly& p : {kFav, kAmy, kPsi}) {
    const Rif phi = make_rif(p);
    for (Axis a : {Axis::z1, Axis::z2}) {
      const RationalFn f = partial_derivative(phi, a);
      for (int k = 0; k < 20; ++k) {
        const Complex z1(u(rng), u(rng)), z2(u(rng), u(rng));
        const Complex e1 = a == Axis::z1 ? h : 0.0, e2 = a == Axis::z2 ? h : 0.0;
        const Complex fd = (eval_phi(phi, z1 + e1, z2 + e2) - eval_phi(phi, z1 - e1, z2 - e2)) / (2.0 * h);
        CHECK(std::abs(fd - f(z1, z2)) < 1e-6 * std::abs(f(z1, z2)) + 1e-9);
      }
    }
  }
}

TEST_CASE("Taylor coefficients") {
  const SeriesGrid a = taylor(make_rif(kFav), 6);
  CHECK(std::abs(a.at(0, 0)) < 1e-15);
  CHECK(std::abs(a.at(1, 0) + 0.5) < 1e-15);
  CHECK(std::abs(a.at(0, 1) + 0.5) < 1e-15);
  CHECK(std::abs(a.at(1, 1) - 0.5) < 1e-15);

  const SeriesGrid m = taylor(make_rif(BiPoly::constant(1), Bidegree{1, 1}), 4);
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) CHECK(std::abs(m.at(k, l) - (k == 1 && l == 1 ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("slices are one-variable Blaschke products") {
  const Rif fav = make_rif(kFav);
  const auto [num, den] = slice_blaschke(fav, Axis::z2, -1.0);
  const auto rs = roots(num);
  REQUIRE(rs.roots.size() == 1);
  CHECK(std::abs(rs.roots[0] - 1.0 / 3.0) < 1e-14);

  const auto [n1, d1] = slice_blaschke(fav, Axis::z2, 1.0);
  CHECK(std::abs(n1.c[0] + 1.0) < 1e-15);
  CHECK(std::abs(n1.c[1] - 1.0) < 1e-15);
  CHECK(std::abs(d1.c[0] - 1.0) < 1e-15);
  CHECK(std::abs(d1.c[1] + 1.0) < 1e-15);

  const Rif cont = make_rif(kCont);
  for (double t : {0.0, 1.0, 2.0, 3.0}) CHECK(slice(cont.ptilde(), Axis::z2, std::polar(1.0, t)).degree() == 1);
  CHECK_THROWS_AS(slice_blaschke(fav, Axis::z2, 0.5), Error);
}

}
