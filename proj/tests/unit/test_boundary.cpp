#include <doctest.h>

#include <cmath>

#include "riflab/boundary.hpp"

using namespace riflab;

namespace {

const BiPoly kFav(Grid{{2, -1}, {-1, 0}});
const BiPoly kAmy(Grid{{4, -3, 1}, {-1, -1, 0}});
const BiPoly kPsi(Grid{{2, 0}, {0, -1}, {0, -1}});
const BiPoly kCont(Grid{{3, -1}, {-1, 0}});

}  // namespace

TEST_SUITE("boundary") {

TEST_CASE("singular sets") {
  for (const BiPoly& p : {kFav, kPsi, kAmy}) {
    const auto s = find_singularities(make_rif(p));
    REQUIRE(s.size() == 1);
    CHECK(std::abs(s[0].tau1 - 1.0) < 1e-10);
    CHECK(std::abs(s[0].tau2 - 1.0) < 1e-10);
    CHECK(s[0].residual_p <= 1e-8);
    CHECK(s[0].residual_ptilde <= 1e-8);
  }
  CHECK(find_singularities(make_rif(kCont)).empty());
  CHECK(find_singularities(make_rif(BiPoly::constant(1), Bidegree{1, 1})).empty());
}

TEST_CASE("epsilon") {
  const Rif fav = make_rif(kFav);
  const double closed = 1.0 - 1.0 / std::sqrt(5.0 - 4.0 * std::cos(0.1));
  CHECK(std::abs(epsilon(fav, Axis::z1, std::polar(1.0, 0.1)) - closed) < 1e-13);
  CHECK(std::abs(epsilon(fav, Axis::z1, -1.0) - 2.0 / 3.0) < 1e-14);
  CHECK(epsilon(fav, Axis::z1, 1.0) < 1e-12);

  const Rif cont = make_rif(kCont);
  for (double t = 0.0; t < 6.28; t += 0.1) CHECK(epsilon(cont, Axis::z1, std::polar(1.0, t)) >= 0.5 - 1e-14);

  // Localized to a far-away point there is no zero in range.
  SingularPoint far{-1.0, -1.0};
  CHECK(std::isinf(epsilon(fav, Axis::z1, std::polar(1.0, 0.1), &far, 0.1)));
}

TEST_CASE("rational snapping") {
  CHECK(snap_rational(1.98, 8, 0.05) == Rational{2, 1});
  CHECK(snap_rational(0.6666, 8, 0.05) == Rational{2, 3});
  CHECK(snap_rational(1.874, 8, 0.005) == Rational{15, 8});
  CHECK_FALSE(snap_rational(0.5201, 2, 0.01).has_value());
}

TEST_CASE("contact orders") {
  const Rif fav = make_rif(kFav);
  const auto sing = find_singularities(fav);
  REQUIRE(sing.size() == 1);
  const ContactFit f = fit_contact_order(fav, Axis::z1, sing[0], sing);
  CHECK(std::abs(f.slope - 2.0) < 0.05);
  REQUIRE(f.K_rational);
  CHECK(*f.K_rational == Rational{2, 1});
  for (const auto& s : f.samples) CHECK(s.eps > 0.0);

  const ContactReport amy = contact_report(make_rif(kAmy));
  CHECK(amy.K1 == doctest::Approx(4.0));
  CHECK(amy.K2 == doctest::Approx(4.0));
  CHECK(amy.hp_threshold_1 == doctest::Approx(1.25));
  CHECK(amy.hp_threshold_2 == doctest::Approx(1.25));

  const ContactReport psi = contact_report(make_rif(kPsi));
  CHECK(psi.K1 == doctest::Approx(2.0));
  CHECK(psi.K2 == doctest::Approx(2.0));

  const ContactReport cont = contact_report(make_rif(kCont));
  CHECK(cont.K1 == 0.0);
  CHECK(std::isinf(cont.hp_threshold_1));
  CHECK(std::isinf(cont.hp_threshold_2));
}

TEST_CASE("symmetric example has equal contact orders") {
  const ContactReport r = contact_report(make_rif(kFav));
  REQUIRE(r.fits.size() == 2);
  CHECK(std::abs(r.fits[0].slope - r.fits[1].slope) <= 2.0 * std::max(r.fits[0].slope_stderr, r.fits[1].slope_stderr) + 1e-3);
}

TEST_CASE("contact order is unchanged by a Mobius change of variables") {
  // m_a(z) = (z - a)/(1 - a z) with real a fixes both 1 and -1, so (1,1) stays singular.
  const double a = 0.3;
  const BiPoly q = compose_mobius(kFav, a, a, {1, 1});
  const ContactReport r = contact_report(make_rif(q));
  REQUIRE(r.singularities.size() == 1);
  CHECK(std::abs(r.singularities[0].tau1 - 1.0) < 1e-9);
  REQUIRE(r.K1_rational);
  CHECK(*r.K1_rational == Rational{2, 1});
  REQUIRE(r.K2_rational);
  CHECK(*r.K2_rational == Rational{2, 1});
}

}
