#include <doctest.h>

#include <cmath>
#include <random>

#include "riflab/kernels.hpp"
#include "riflab/registry.hpp"

using namespace riflab;

TEST_SUITE("kernels") {

TEST_CASE("Agler identities") {
  const auto& fav = registry_entry("favorite");
  const auto& psi = registry_entry("psi");
  CHECK(verify_agler(fav.rif(), *fav.expected.agler, 1000, 42).max_abs < 1e-12);
  CHECK(verify_agler(psi.rif(), *psi.expected.agler, 1000, 42).max_abs < 1e-12);

  AglerVectors wrong = *psi.expected.agler;
  for (auto& e : wrong.E1) e *= 2.0;
  CHECK(verify_agler(psi.rif(), wrong, 1000, 42).max_abs > 0.1);

  // Only |.|^2 enters, so a unimodular rescaling changes nothing.
  AglerVectors turned = *psi.expected.agler;
  const Complex u = std::polar(1.0, 0.8);
  for (auto& e : turned.E1) e *= u;
  for (auto& f : turned.F2) f *= u;
  const auto a = verify_agler(psi.rif(), *psi.expected.agler, 200, 5);
  const auto b = verify_agler(psi.rif(), turned, 200, 5);
  CHECK(std::abs(a.max_abs - b.max_abs) < 1e-14);
}

TEST_CASE("local Dirichlet integrals") {
  const auto& fav = registry_entry("favorite");
  const auto& psi = registry_entry("psi");
  struct Point {
    Complex z1, z2;
    double fav, psi;
  };
  // Frozen kernel-form values.
  const Point pts[] = {{0.0, 0.0, 1.0 / 3.0, 0.5},
                       {0.5, Complex(0, -0.3), 0.47243658894144, 0.34838580070363},
                       {0.2, 0.4, 0.52702399641175, 0.34894591908574}};
  for (const auto& p : pts) {
    const auto bf = local_dirichlet_boundary(fav.rif(), p.z1, p.z2);
    const auto kf = local_dirichlet_kernel(fav.rif(), *fav.expected.agler, p.z1, p.z2);
    CHECK(bf.classification == Verdict::converged);
    CHECK(std::abs(bf.value - p.fav) < 1e-10);
    CHECK(std::abs(kf.value - p.fav) < 1e-10);
    const auto bp = local_dirichlet_boundary(psi.rif(), p.z1, p.z2);
    const auto kp = local_dirichlet_kernel(psi.rif(), *psi.expected.agler, p.z1, p.z2);
    CHECK(std::abs(bp.value - p.psi) < 1e-10);
    CHECK(std::abs(kp.value - p.psi) < 1e-10);
  }
  const Rif mono = registry_entry("monomial").rif();
  CHECK(local_dirichlet_boundary(mono, 0.0, 0.0).value == doctest::Approx(1.0));

  const auto torus = local_dirichlet_kernel(fav.rif(), *fav.expected.agler, -1.0, -1.0);
  CHECK(torus.classification == Verdict::converged);
  CHECK(std::isfinite(torus.value));
  CHECK(torus.value >= 0.0);

  CHECK_THROWS_AS(local_dirichlet_boundary(fav.rif(), 0.9995, 0.0), Error);
  CHECK_THROWS_AS(local_dirichlet_kernel(fav.rif(), *fav.expected.agler, 1.0, 1.0), Error);
}

TEST_CASE("Doug functional") {
  SUBCASE("monomial") {
    const auto r = doug_quadrature(RationalFn{BiPoly::monomial(1, 1), BiPoly::constant(1)});
    CHECK(r.classification == Verdict::converged);
    CHECK(r.value == doctest::Approx(1.0));
  }
  SUBCASE("coefficient formula") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int t = 0; t < 5; ++t) {
      Grid c(4, std::vector<Complex>(4));
      for (auto& row : c)
        for (auto& x : row) x = Complex(g(rng), g(rng));
      const BiPoly f(c);
      const double q = doug_quadrature(RationalFn{f, BiPoly::constant(1)}).value;
      CHECK(std::abs(q - doug_coefficients(f)) < 1e-10 * doug_coefficients(f));
    }
  }
  SUBCASE("singular examples diverge") {
    CHECK(doug_quadrature(registry_entry("favorite").rif()).classification == Verdict::diverging);
    CHECK(doug_quadrature(registry_entry("psi").rif()).classification == Verdict::diverging);
  }
  SUBCASE("smooth example converges") {
    const auto r = doug_quadrature(registry_entry("continuous").rif());
    CHECK(r.classification == Verdict::converged);
    CHECK(r.value == doctest::Approx(1.3247483895).epsilon(1e-8));
  }
}

}
