#include "riflab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "riflab/parallel.hpp"

namespace riflab {

namespace {

// Seeded point of the open bidisk, uniform in area on each factor.
std::pair<Complex, Complex> random_bidisk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r1 = std::sqrt(u(rng)), t1 = 2.0 * kPi * u(rng);
  const double r2 = std::sqrt(u(rng)), t2 = 2.0 * kPi * u(rng);
  return {std::polar(r1, t1), std::polar(r2, t2)};
}

double sum_sq(const std::vector<BiPoly>& v, Complex z1, Complex z2) {
  double s = 0.0;
  for (const auto& q : v) s += std::norm(q(z1, z2));
  return s;
}

}  // namespace

ResidualStats verify_agler(const Rif& phi, const AglerVectors& v, int samples, std::uint64_t seed, Exec exec) {
  if (samples <= 0) throw Error(ErrorCode::invalid_argument, "need a positive sample count");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Complex, Complex>> pts(samples);
  for (auto& z : pts) z = random_bidisk_point(rng);
  const auto res = map_indexed<double>(pts.size(), exec, [&](std::size_t i) {
    const auto [z1, z2] = pts[i];
    const double lhs = std::norm(phi.p()(z1, z2)) - std::norm(phi.ptilde()(z1, z2));
    const double rhs = (1.0 - std::norm(z1)) * sum_sq(v.E1, z1, z2) + (1.0 - std::norm(z2)) * sum_sq(v.F2, z1, z2);
    return std::abs(lhs - rhs);
  });
  ResidualStats st;
  st.sample_count = samples;
  for (double r : res) st.max_abs = std::max(st.max_abs, r);
  st.mean_abs = pairwise_sum(res) / samples;
  return st;
}

namespace {

void check_interior(Complex z1, Complex z2) {
  if (std::max(std::abs(z1), std::abs(z2)) > 1.0 - 1e-3)
    throw Error(ErrorCode::point_too_close_to_boundary, "local Dirichlet boundary form needs an interior point");
}

// Runs `estimate(N)` for N doubling from min to max until consecutive values agree.
template <class F>
QuadratureResult trapezoid_ladder(const LocalDirichletConfig& cfg, F&& estimate) {
  QuadratureResult r;
  for (int N = cfg.min_points; N <= cfg.max_points; N *= 2) {
    r.levels.push_back({N, estimate(N)});
    const auto n = r.levels.size();
    if (n >= 2 && std::abs(r.levels[n - 1].estimate - r.levels[n - 2].estimate) <=
                      cfg.rel_tol * std::max(1.0, std::abs(r.levels[n - 1].estimate)))
      break;
  }
  classify_ladder(r, cfg.rel_tol);
  r.value = r.levels.back().estimate;
  return r;
}

}  // namespace

QuadratureResult local_dirichlet_boundary(const Rif& phi, Complex z1, Complex z2, const LocalDirichletConfig& cfg) {
  check_interior(z1, z2);
  const double phiz = std::norm(eval_phi(phi, z1, z2));
  // The numerator splits as A(eta1) + B(eta2) over the product denominator, so
  // the N x N trapezoid sum factors into one-variable sums.
  return trapezoid_ladder(cfg, [&](int N) {
    std::vector<double> a_over(N), inv1(N), b_over(N), inv2(N);
    for (int j = 0; j < N; ++j) {
      const Complex eta = std::polar(1.0, 2.0 * kPi * j / N);
      const double d1 = std::norm(eta - z1), d2 = std::norm(eta - z2);
      a_over[j] = (1.0 - std::norm(eval_phi(phi, eta, z2))) / d1;
      inv1[j] = 1.0 / d1;
      b_over[j] = (phiz - std::norm(eval_phi(phi, z1, eta))) / d2;
      inv2[j] = 1.0 / d2;
    }
    const double h = 1.0 / N;  // (1/2pi) * (2pi/N) per variable
    return h * h * (pairwise_sum(a_over) * pairwise_sum(inv2) + pairwise_sum(inv1) * pairwise_sum(b_over));
  });
}

QuadratureResult local_dirichlet_kernel(const Rif& phi, const AglerVectors& v, Complex z1, Complex z2,
                                        const LocalDirichletConfig& cfg) {
  if (std::max(std::abs(z1), std::abs(z2)) > 1.0 + 1e-12)
    throw Error(ErrorCode::invalid_argument, "kernel form needs a point of the closed bidisk");
  const Complex pz = phi.p()(z1, z2);
  if (std::abs(pz) <= 1e-10 * phi.p().eval_scale(z1, z2))
    throw Error(ErrorCode::singular_evaluation_point, "p vanishes at the evaluation point");
  std::vector<Complex> fq, er;
  for (const auto& q : v.F2) fq.push_back(q(z1, z2) / pz);
  for (const auto& r : v.E1) er.push_back(r(z1, z2) / pz);

  // Nodes are offset by half a step from arg z so a boundary point never
  // coincides with a node.
  return trapezoid_ladder(cfg, [&](int N) {
    const double off1 = std::arg(z1) + kPi / N, off2 = std::arg(z2) + kPi / N;
    std::vector<double> terms(N);
    for (int j = 0; j < N; ++j) {
      const Complex e1 = std::polar(1.0, off1 + 2.0 * kPi * j / N);
      const Complex e2 = std::polar(1.0, off2 + 2.0 * kPi * j / N);
      const Complex p1 = phi.p()(e1, z2), p2 = phi.p()(z1, e2);
      double s = 0.0;
      for (std::size_t k = 0; k < fq.size(); ++k) s += std::norm(v.F2[k](e1, z2) / p1 - fq[k]) / std::norm(z1 - e1);
      for (std::size_t k = 0; k < er.size(); ++k) s += std::norm(v.E1[k](z1, e2) / p2 - er[k]) / std::norm(z2 - e2);
      terms[j] = s;
    }
    return pairwise_sum(terms) / N;
  });
}

namespace {

// (1/N^2) sum over s, t of |g(s) - g(t)|^2 / |e^{is} - e^{it}|^2, diagonal from g'.
double douglas_sum(const std::vector<Complex>& g, const std::vector<Complex>& dg, const std::vector<double>& inv_chord) {
  const int N = static_cast<int>(g.size());
  double s = 0.0;
  for (int i = 0; i < N; ++i) {
    double row = std::norm(dg[i]);
    for (int j = 0; j < N; ++j)
      if (j != i) row += std::norm(g[i] - g[j]) * inv_chord[(i - j + N) % N];
    s += row;
  }
  return s / (double(N) * N);
}

double doug_level(const RationalFn& f, const RationalFn& f1, const RationalFn& f2, const RationalFn& f12, int N,
                  Exec exec) {
  std::vector<Complex> w(N);
  for (int j = 0; j < N; ++j) w[j] = std::polar(1.0, 2.0 * kPi * (j + 0.5) / N);
  // 1 / |w_i - w_j|^2 depends only on i - j.
  std::vector<double> inv_chord(N, 0.0);
  for (int d = 1; d < N; ++d) inv_chord[d] = 1.0 / std::norm(w[d] - w[0]);

  std::vector<Complex> a(N), da(N), b(N), db(N);
  for (int j = 0; j < N; ++j) {
    a[j] = f(w[j], 0.0), da[j] = f1(w[j], 0.0);
    b[j] = f(0.0, w[j]), db[j] = f2(0.0, w[j]);
  }
  const double t0 = std::norm(f(0.0, 0.0));
  const double t1 = douglas_sum(a, da, inv_chord);
  const double t2 = douglas_sum(b, db, inv_chord);

  // Grids of f and its derivatives on T^2.
  auto grid = [&](const RationalFn& g) {
    std::vector<Complex> out(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) out[static_cast<std::size_t>(i) * N + j] = g(w[i], w[j]);
    return out;
  };
  const auto F = grid(f), F1 = grid(f1), F2 = grid(f2), F12 = grid(f12);
  auto at = [N](const std::vector<Complex>& G, int i, int j) { return G[static_cast<std::size_t>(i) * N + j]; };

  // For each pair (i, k) of first-variable nodes, the second variable carries
  // a one-variable Douglas sum of g(j) = [f(i, j) - f(k, j)] / (w_i - w_k),
  // or of d1 f(i, j) on the diagonal i == k.
  const auto rows = map_indexed<double>(static_cast<std::size_t>(N), exec, [&](std::size_t ii) {
    const int i = static_cast<int>(ii);
    std::vector<Complex> g(N), dg(N);
    double acc = 0.0;
    for (int k = 0; k < N; ++k) {
      if (k == i) {
        for (int j = 0; j < N; ++j) g[j] = at(F1, i, j), dg[j] = at(F12, i, j);
      } else {
        const Complex inv = 1.0 / (w[i] - w[k]);
        for (int j = 0; j < N; ++j) g[j] = (at(F, i, j) - at(F, k, j)) * inv, dg[j] = (at(F2, i, j) - at(F2, k, j)) * inv;
      }
      acc += douglas_sum(g, dg, inv_chord);
    }
    return acc / (double(N) * N);
  });
  const double t3 = pairwise_sum(rows);
  return t0 + t1 + t2 + t3;
}

}  // namespace

QuadratureResult doug_quadrature(const RationalFn& f, const DougConfig& cfg) {
  if (cfg.ladder.size() < 2) throw Error(ErrorCode::invalid_argument, "Doug ladder needs at least two levels");
  const RationalFn f1 = derivative(f, Axis::z1), f2 = derivative(f, Axis::z2);
  const RationalFn f12 = derivative(f1, Axis::z2);
  QuadratureResult r;
  for (int N : cfg.ladder) {
    r.levels.push_back({N, doug_level(f, f1, f2, f12, N, cfg.exec)});
    const auto n = r.levels.size();
    if (n >= 2 && std::abs(r.levels[n - 1].estimate - r.levels[n - 2].estimate) <=
                      cfg.early_stop * std::max(1.0, std::abs(r.levels[n - 1].estimate)))
      break;
  }
  classify_ladder(r, cfg.rel_tol, cfg.growth_tol);
  r.value = r.classification == Verdict::diverging ? std::numeric_limits<double>::infinity() : r.levels.back().estimate;
  return r;
}

QuadratureResult doug_quadrature(const Rif& phi, const DougConfig& cfg) {
  return doug_quadrature(RationalFn{phi.ptilde(), phi.p()}, cfg);
}

double doug_coefficients(const BiPoly& f) {
  double s = 0.0;
  for (int k = 0; k <= f.m(); ++k)
    for (int l = 0; l <= f.n(); ++l) {
      const double w = (k == 0 && l == 0) ? 1.0 : (k == 0 ? double(l) : (l == 0 ? double(k) : double(k) * l));
      s += w * std::norm(f.coeff(k, l));
    }
  return s;
}

}  // namespace riflab
