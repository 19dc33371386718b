// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

#include "riflab/halfplane.hpp"
#include "riflab/kernels.hpp"
#include "riflab/norms.hpp"
#include "riflab/registry.hpp"

using namespace riflab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& f) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("%-5s %s  %s: %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", title, o.detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome ac1() {
  bool ok = true;
  std::string d;
  for (const auto& [name, K] : {std::pair{"favorite", 2.0}, {"psi", 2.0}, {"amy", 4.0}}) {
    const auto t0 = Clock::now();
    const ContactReport c = contact_report(registry_entry(name).rif());
    const double t = seconds_since(t0);
    const bool good = c.K1_rational && c.K2_rational && std::abs(c.K1_rational->value() - K) <= 0.05 &&
                      std::abs(c.K2_rational->value() - K) <= 0.05 && t < 10.0;
    for (const auto& f : c.fits) ok = ok && std::abs(f.slope - K) <= 0.05;
    ok = ok && good;
    d += fmt("%s %.4f/%.4f in %.1fs; ", name, c.K1, c.K2, t);
  }
  return {ok, d + "tol 0.05, < 10 s each"};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  int agree = 0, cells = 0;
  std::string d;
  for (const auto& e : registry()) {
    const Rif phi = e.rif();
    const ContactReport c = contact_report(phi);
    for (double p : {1.1, 1.4, 1.6, 2.0}) {
      const bool expect_finite = c.K1 * (p - 1.0) < 1.0;
      const auto r = hp_norm_derivative(phi, Axis::z1, p, c.singularities, QuadConfig{.exec = Exec::parallel});
      const bool match = expect_finite ? r.classification == Verdict::converged : r.classification == Verdict::diverging;
      agree += match;
      ++cells;
      if (!match) d += fmt("mismatch %s p=%.1f (%s); ", e.name.c_str(), p, to_string(r.classification));
      if (e.name == "favorite") d += fmt("favorite p=%.1f %s; ", p, to_string(r.classification));
    }
  }
  const double t = seconds_since(t0);
  return {agree == cells && t < 120.0, d + fmt("%d/%d cells agree, %.0f s (< 120 s)", agree, cells, t)};
}

Outcome ac3() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string d;
  for (const auto& e : registry()) {
    const H1Check h = h1_degree_check(e.rif(), QuadConfig{.exec = Exec::parallel});
    const double r1 = std::abs(h.value1 - h.m) / h.m, r2 = std::abs(h.value2 - h.n) / h.n;
    ok = ok && r1 <= 1e-3 && r2 <= 1e-3;
    d += fmt("%s (%.6f, %.6f) vs (%d, %d); ", e.name.c_str(), h.value1, h.value2, h.m, h.n);
  }
  const double t = seconds_since(t0);
  return {ok && t < 60.0, d + "rel tol 1e-3, < 60 s"};
}

Outcome ac4() {
  bool ok = true;
  std::string d;
  for (const auto& e : registry()) {
    const ContactReport c = contact_report(e.rif());
    if (c.singularities.empty()) continue;
    ok = ok && c.K1 >= 1.9 && c.K2 >= 1.9;
    d += fmt("%s %.3f/%.3f; ", e.name.c_str(), c.K1, c.K2);
  }
  return {ok, d + "bound 1.9"};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  const DirichletConfig cfg{.exec = Exec::parallel};
  const SeriesGrid a = taylor(registry_entry("favorite").rif(), 512, Exec::parallel);
  const auto f5 = dirichlet_partial(a, 0.5, 0.5, 512, cfg);
  const auto f9 = dirichlet_partial(a, 0.9, 0.9, 512, cfg);
  const BiPoly psi = registry_entry("psi").p;
  const auto pm = inv_series_dirichlet(psi, -0.5, 512, cfg);
  const auto p0 = inv_series_dirichlet(psi, 0.0, 512, cfg);
  const double t = seconds_since(t0);
  const bool ok = f5.verdict == Membership::member && f9.verdict == Membership::not_member &&
                  pm.verdict == Membership::member && p0.verdict == Membership::not_member && t < 30.0;
  return {ok, fmt("favorite a=0.5 %s (s=%.3f), a=0.9 %s (s=%.3f); 1/psi a=-0.5 %s (s=%.3f), a=0 %s (s=%.3f); N=512, "
                  "margin 0.15, < 30 s",
                  to_string(f5.verdict), f5.tail_exponent, to_string(f9.verdict), f9.tail_exponent,
                  to_string(pm.verdict), pm.tail_exponent, to_string(p0.verdict), p0.tail_exponent)};
}

Outcome ac6() {
  bool ok = true;
  std::string d;
  for (const auto& e : registry()) {
    const auto t = dirichlet_partial(taylor(e.rif(), 512, Exec::parallel), 0.0, 0.0, 512, {.exec = Exec::parallel});
    const double s = t.partial_sums.back().second;
    ok = ok && std::abs(s - 1.0) <= 1e-3;
    d += fmt("%s %.6f; ", e.name.c_str(), s);
  }
  return {ok, d + "N=512, tol 1e-3"};
}

Outcome ac7() {
  bool ok = true;
  std::string d;
  for (const char* n : {"psi", "favorite"}) {
    const auto& e = registry_entry(n);
    const auto st = verify_agler(e.rif(), *e.expected.agler, 1000, 42, Exec::parallel);
    ok = ok && st.max_abs < 1e-12;
    d += fmt("%s max %.2e; ", n, st.max_abs);
  }
  return {ok, d + "1000 samples, seed 42, tol 1e-12"};
}

Outcome ac8() {
  bool ok = true;
  double worst = 0.0;
  int points = 0;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> r(0.0, 0.9), th(-kPi, kPi);
  for (const auto& e : registry()) {
    if (!e.expected.agler) continue;
    const Rif phi = e.rif();
    for (int k = 0; k < 10; ++k) {
      const Complex z1 = std::polar(r(rng), th(rng)), z2 = std::polar(r(rng), th(rng));
      const double b = local_dirichlet_boundary(phi, z1, z2).value;
      const double kf = local_dirichlet_kernel(phi, *e.expected.agler, z1, z2).value;
      const double rel = std::abs(b - kf) / (1.0 + std::abs(kf));
      worst = std::max(worst, rel);
      ok = ok && rel < 1e-4;
      ++points;
    }
  }
  return {ok, fmt("%d points over RIFs with known vectors, worst %.2e (tol 1e-4)", points, worst)};
}

Outcome ac9() {
  std::mt19937_64 rng(42);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    Grid c(4, std::vector<Complex>(4));
    for (auto& row : c)
      for (auto& x : row) x = Complex(g(rng), g(rng));
    const BiPoly f(c);
    const double q = doug_quadrature(RationalFn{f, BiPoly::constant(1)}, {.exec = Exec::parallel}).value;
    const double ex = doug_coefficients(f);
    worst = std::max(worst, std::abs(q - ex) / ex);
  }
  const auto fav = doug_quadrature(registry_entry("favorite").rif(), {.exec = Exec::parallel});
  const auto psi = doug_quadrature(registry_entry("psi").rif(), {.exec = Exec::parallel});
  const bool ok = worst < 1e-6 && fav.classification == Verdict::diverging && psi.classification == Verdict::diverging;
  return {ok, fmt("20 polynomials worst rel %.2e (tol 1e-6); favorite %s (growth %.2f), psi %s (growth %.2f)", worst,
                  to_string(fav.classification), fav.growth_exponent, to_string(psi.classification),
                  psi.growth_exponent)};
}

Outcome ac10() {
  bool ok = true;
  std::string d;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> x(-4, 4), y(0.05, 4);
  for (const char* n : {"favorite", "psi"}) {
    const auto& e = registry_entry(n);
    const PickFn f = pick_transform(e.rif());
    const bool exact = same_rational(f.f, *e.expected.pick);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      const Complex w1(x(rng), y(rng)), w2(x(rng), y(rng));
      worst = std::max(worst, std::abs(f(w1, w2) - f.composed(w1, w2)) / std::abs(f.composed(w1, w2)));
    }
    ok = ok && exact && worst < 1e-10;
    d += fmt("%s closed form %s, composed worst %.2e; ", n, exact ? "exact" : "MISMATCH", worst);
  }
  return {ok, d + "tol 1e-10 at 50 points"};
}

Outcome ac11() {
  const std::string cmd = std::string(RIFLAB_PROPERTIES) + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  return {ok, "standalone property binary (reflection, torus modulus, Blaschke derivative, Cayley, inverse series) " +
                  std::string(ok ? "green" : "failed")};
}

}  // namespace

int main() {
  criterion("AC1", "contact orders", ac1);
  criterion("AC2", "H^p concordance", ac2);
  criterion("AC3", "H^1 = degree", ac3);
  criterion("AC4", "Julia bound", ac4);
  criterion("AC5", "Dirichlet verdicts", ac5);
  criterion("AC6", "Parseval", ac6);
  criterion("AC7", "Agler identities", ac7);
  criterion("AC8", "local Dirichlet cross-form", ac8);
  criterion("AC9", "Doug functional", ac9);
  criterion("AC10", "Pick transforms", ac10);
  criterion("AC11", "property suites", ac11);
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
