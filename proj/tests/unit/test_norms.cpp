#include <doctest.h>

#include <cmath>

#include "riflab/norms.hpp"

using namespace riflab;

namespace {

const BiPoly kFav(Grid{{2, -1}, {-1, 0}});
const BiPoly kAmy(Grid{{4, -3, 1}, {-1, -1, 0}});
const BiPoly kPsi(Grid{{2, 0}, {0, -1}, {0, -1}});
const BiPoly kCont(Grid{{3, -1}, {-1, 0}});

}  // namespace

TEST_SUITE("norms") {

TEST_CASE("H^p of the favorite example") {
  const Rif fav = make_rif(kFav);
  // Frozen from an independent long-double brute-force graded-grid integration.
  const auto r = hp_norm_derivative(fav, Axis::z1, 1.2);
  CHECK(r.classification == Verdict::converged);
  REQUIRE(!r.levels.empty());
  CHECK(std::abs(r.levels.back().estimate - 1.2258573505) < 1e-3 * 1.2258573505);
  for (std::size_t i = 1; i < r.levels.size(); ++i) CHECK(r.levels[i].n > r.levels[i - 1].n);

  CHECK(hp_norm_derivative(fav, Axis::z1, 1.6).classification == Verdict::diverging);
  CHECK(std::isinf(hp_norm_derivative(fav, Axis::z1, 1.6).value));
}

TEST_CASE("H^p of the monomial is 1") {
  const Rif mono = make_rif(BiPoly::constant(1), Bidegree{1, 1});
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto r = hp_norm_derivative(mono, Axis::z1, p);
    CHECK(r.classification == Verdict::converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("fiber rules agree away from singular fibers") {
  const Rif psi = make_rif(kPsi);
  for (double th : {0.3, 1.0, 2.5, -0.05}) {
    const long double a = fiber_mean(psi, Axis::z2, 1.3, th, FiberRule::blaschke);
    const long double b = fiber_mean(psi, Axis::z2, 1.3, th, FiberRule::quotient);
    CHECK(std::abs(double(a - b)) < 1e-9 * double(a));
  }
}

TEST_CASE("H^1 equals the degree") {
  const auto amy = h1_degree_check(make_rif(kAmy));
  CHECK(amy.m == 1);
  CHECK(amy.n == 2);
  CHECK(amy.value1 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(amy.value2 == doctest::Approx(2.0).epsilon(1e-3));
  const auto psi = h1_degree_check(make_rif(kPsi));
  CHECK(psi.value1 == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(psi.value2 == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("monotone in p") {
  const Rif fav = make_rif(kFav);
  double prev = 0.0;
  for (double p : {1.0, 1.1, 1.2}) {
    const auto r = hp_norm_derivative(fav, Axis::z2, p);
    REQUIRE(r.classification == Verdict::converged);
    const double mean = r.levels.back().estimate;
    CHECK(mean >= prev - 1e-9);
    prev = mean;
  }
}

TEST_CASE("exponent below 1 is rejected") {
  CHECK_THROWS_AS(hp_norm_derivative(make_rif(kFav), Axis::z1, 0.9), Error);
}

TEST_CASE("Dirichlet tails") {
  const Rif fav = make_rif(kFav);
  const SeriesGrid a = taylor(fav, 512);
  const auto h2 = dirichlet_partial(a, 0.0, 0.0, 256);
  CHECK(h2.partial_sums.back().second == doctest::Approx(1.0).epsilon(1e-3));
  const auto t9 = dirichlet_partial(a, 0.9, 0.9, 512);
  CHECK(t9.verdict == Membership::not_member);
  CHECK(t9.tail_exponent == doctest::Approx(2 * 0.9 - 2.5).epsilon(0.05));
  const auto t5 = dirichlet_partial(a, 0.5, 0.5, 512);
  CHECK(t5.verdict == Membership::member);
  CHECK(t5.tail_exponent == doctest::Approx(-1.5).epsilon(0.05));

  auto t75 = dirichlet_partial(a, 0.75, 0.75, 512);
  CHECK(t75.verdict == Membership::inconclusive);
  apply_contact_override(t75, contact_report(fav));
  CHECK(t75.verdict == Membership::not_member);
  CHECK(t75.theorem_override);

  CHECK(inv_series_dirichlet(kPsi, -0.5, 512).verdict == Membership::member);
  const auto z = inv_series_dirichlet(kPsi, 0.0, 512);
  CHECK(z.verdict == Membership::not_member);
  CHECK(z.tail_exponent == doctest::Approx(-0.5).epsilon(0.05));

  const auto one = inv_series_dirichlet(BiPoly::constant(1), 2.0, 16);
  CHECK(one.verdict == Membership::member);
  CHECK(one.partial_sums.back().second == doctest::Approx(1.0));

  CHECK_THROWS_AS(dirichlet_partial(a, 0, 0, 4), Error);
}

TEST_CASE("membership table") {
  const auto fav = membership_table(contact_report(make_rif(kFav)));
  CHECK(fav.singular);
  CHECK(fav.excludes_three_halves);
  CHECK(fav.hp_sup_1 == doctest::Approx(1.5));
  CHECK(fav.d_alpha_sup == doctest::Approx(0.75));
  CHECK(hp_member(fav, Axis::z1, 1.4));
  CHECK_FALSE(hp_member(fav, Axis::z1, 1.5));

  const auto amy = membership_table(contact_report(make_rif(kAmy)));
  CHECK(amy.hp_sup_2 == doctest::Approx(1.25));
  CHECK(amy.d_alpha_sup == doctest::Approx(0.625));

  const auto cont = membership_table(contact_report(make_rif(kCont)));
  CHECK_FALSE(cont.singular);
  CHECK(std::isinf(cont.d_alpha_sup));
  CHECK(hp_member(cont, Axis::z2, 100.0));
}

}
