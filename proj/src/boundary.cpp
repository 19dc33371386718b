#include "riflab/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "riflab/parallel.hpp"
#include "riflab/resultant.hpp"
#include "riflab/roots1.hpp"

namespace riflab {

namespace {

double pair_dist(const SingularPoint& a, const SingularPoint& b) {
  return std::max(std::abs(a.tau1 - b.tau1), std::abs(a.tau2 - b.tau2));
}

Complex unit(Complex z) { return z / std::abs(z); }

bool verify(const Rif& phi, SingularPoint& s, double tol) {
  s.residual_p = std::abs(phi.p()(s.tau1, s.tau2));
  s.residual_ptilde = std::abs(phi.ptilde()(s.tau1, s.tau2));
  const double scale = std::max(1.0, phi.p().eval_scale(s.tau1, s.tau2));
  return s.residual_p <= tol * scale && s.residual_ptilde <= tol * scale;
}

void merge_into(std::vector<SingularPoint>& acc, const SingularPoint& s, double radius) {
  for (auto& a : acc)
    if (pair_dist(a, s) < radius) {
      if (s.residual_p + s.residual_ptilde < a.residual_p + a.residual_ptilde) {
        const int size = std::max(a.cluster_size, s.cluster_size);
        a = s;
        a.cluster_size = size;
      } else {
        a.cluster_size = std::max(a.cluster_size, s.cluster_size);
      }
      return;
    }
  acc.push_back(s);
}

// Candidates from the unimodular roots of Res_{eliminated}(p, ptilde).
std::vector<SingularPoint> from_resultant(const Rif& phi, Axis eliminated, const ScanConfig& cfg) {
  std::vector<SingularPoint> out;
  const Axis keep = other(eliminated);
  const int d = phi.degree_in(eliminated);
  if (d == 0 || phi.degree_in(keep) == 0) return out;
  const UniPoly R = resultant(phi.p(), phi.ptilde(), eliminated, d, d);
  const double scale = std::pow(std::max(phi.p().max_abs(), phi.ptilde().max_abs()), 2.0 * d);
  if (R.max_abs() <= 1e-10 * scale || R.degree() < 1) return out;

  const RootSet rs = roots(R);
  for (const Cluster& c : cluster_points(rs.roots, cfg.root_cluster_radius)) {
    const Complex center = polish_cluster(R, c.center, c.size);
    if (std::abs(std::abs(center) - 1.0) > cfg.unimodular_tol) continue;
    const Complex t = unit(center);
    UniPoly q = slice(phi.p(), keep, t);
    if (q.is_zero() || q.degree() < 1) continue;
    const RootSet companions = roots(q);
    for (const Cluster& cc : cluster_points(companions.roots, cfg.root_cluster_radius)) {
      const Complex w = polish_cluster(q, cc.center, cc.size);
      if (std::abs(std::abs(w) - 1.0) > 1e-6) continue;
      SingularPoint s;
      s.tau1 = eliminated == Axis::z1 ? unit(w) : t;
      s.tau2 = eliminated == Axis::z1 ? t : unit(w);
      s.cluster_size = c.size;
      if (verify(phi, s, cfg.tol_singular)) out.push_back(s);
    }
  }
  return out;
}

// min | |z| - 1 | over zeros z of p with the variable `fixed` at e^{i theta}.
std::pair<double, Complex> circle_gap(const BiPoly& p, Axis fixed, double theta) {
  UniPoly q = slice(p, fixed, std::polar(1.0, theta));
  std::pair<double, Complex> best{std::numeric_limits<double>::infinity(), Complex(0.0)};
  if (q.is_zero() || q.degree() < 1) return best;
  for (const auto& r : roots(q).roots) {
    const double g = std::abs(std::abs(r) - 1.0);
    if (g < best.first) best = {g, r};
  }
  return best;
}

// Angular scan over the fixed variable, refining local minima of the gap.
std::vector<SingularPoint> from_scan(const Rif& phi, Axis fixed, const ScanConfig& cfg) {
  std::vector<SingularPoint> out;
  const int A = cfg.angles;
  const auto gaps = map_indexed<double>(static_cast<std::size_t>(A), cfg.exec, [&](std::size_t j) {
    return circle_gap(phi.p(), fixed, 2.0 * kPi * double(j) / A).first;
  });
  const double h = 2.0 * kPi / A;
  for (int j = 0; j < A; ++j) {
    const double g = gaps[j], gl = gaps[(j + A - 1) % A], gr = gaps[(j + 1) % A];
    if (!(g < cfg.coarse_tol) || g > gl || g > gr) continue;
    double lo = h * j - h, hi = h * j + h;
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int round = 0; round < cfg.refine_rounds; ++round) {
      double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
      double f1 = circle_gap(phi.p(), fixed, x1).first, f2 = circle_gap(phi.p(), fixed, x2).first;
      for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
          hi = x2, x2 = x1, f2 = f1, x1 = hi - ratio * (hi - lo);
          f1 = circle_gap(phi.p(), fixed, x1).first;
        } else {
          lo = x1, x1 = x2, f1 = f2, x2 = lo + ratio * (hi - lo);
          f2 = circle_gap(phi.p(), fixed, x2).first;
        }
      }
    }
    const double th = 0.5 * (lo + hi);
    const auto [gap, root] = circle_gap(phi.p(), fixed, th);
    (void)gap;
    SingularPoint s;
    const Complex t = std::polar(1.0, th);
    s.tau1 = fixed == Axis::z2 ? unit(root) : t;
    s.tau2 = fixed == Axis::z2 ? t : unit(root);
    s.cluster_size = 1;
    if (verify(phi, s, cfg.tol_singular)) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<SingularPoint> find_singularities(const Rif& phi, const ScanConfig& cfg) {
  std::vector<SingularPoint> found;
  for (Axis e : {Axis::z1, Axis::z2})
    for (const auto& s : from_resultant(phi, e, cfg)) merge_into(found, s, cfg.cluster_radius);
  // The scan only locates a flat minimum, so its hits count as new points
  // only when they are far from everything already found.
  for (Axis f : {Axis::z2, Axis::z1})
    for (const auto& s : from_scan(phi, f, cfg)) {
      bool known = false;
      for (const auto& a : found) known = known || pair_dist(a, s) < cfg.root_cluster_radius;
      if (!known) merge_into(found, s, cfg.cluster_radius);
    }
  std::sort(found.begin(), found.end(), [](const SingularPoint& a, const SingularPoint& b) {
    const double aa = std::arg(a.tau1), ba = std::arg(b.tau1);
    if (aa != ba) return aa < ba;
    return std::arg(a.tau2) < std::arg(b.tau2);
  });
  return found;
}

long double epsilon_ld(const Rif& phi, Axis axis, ComplexLD zeta, const SingularPoint* near, double radius) {
  zeta /= std::abs(zeta);
  UniPolyLD q = phi.ptilde().slice_raw<long double>(other(axis), zeta);
  const int d = phi.degree_in(axis);
  q.c.resize(static_cast<std::size_t>(d) + 1);
  if (d == 0) return std::numeric_limits<long double>::infinity();
  if (std::abs(q.c[d]) <= 1e-12L * q.max_abs()) throw Error(ErrorCode::degenerate_slice, "slice degree drops at this point");
  const RootSetLD rs = roots(q);
  long double best = std::numeric_limits<long double>::infinity();
  for (const auto& r : rs.roots) {
    if (near) {
      const Complex c = near->tau(axis);
      if (std::abs(r - ComplexLD(c.real(), c.imag())) > radius) continue;
    }
    best = std::min(best, 1.0L - std::abs(r));
  }
  return best;
}

double epsilon(const Rif& phi, Axis axis, Complex zeta, const SingularPoint* near, double radius) {
  return static_cast<double>(epsilon_ld(phi, axis, ComplexLD(zeta.real(), zeta.imag()), near, radius));
}

std::optional<Rational> snap_rational(double x, int max_denom, double tol) {
  std::optional<Rational> best;
  double err = std::numeric_limits<double>::infinity();
  for (long q = 1; q <= max_denom; ++q) {
    const long p = std::lround(x * double(q));
    const double e = std::abs(x - double(p) / double(q));
    if (e < err - 1e-15) {
      err = e;
      const long g = std::gcd(std::abs(p), q);
      best = Rational{p / (g ? g : 1), q / (g ? g : 1)};
    }
  }
  if (err < tol) return best;
  return std::nullopt;
}

namespace {

struct LineFit {
  double slope = std::numeric_limits<double>::quiet_NaN();
  double stderr_ = std::numeric_limits<double>::infinity();
  int n = 0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit f;
  f.n = static_cast<int>(x.size());
  if (f.n < 2) return f;
  double mx = 0, my = 0;
  for (int i = 0; i < f.n; ++i) mx += x[i], my += y[i];
  mx /= f.n, my /= f.n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < f.n; ++i) sxx += (x[i] - mx) * (x[i] - mx), sxy += (x[i] - mx) * (y[i] - my);
  f.slope = sxy / sxx;
  const double b = my - f.slope * mx;
  double ssr = 0;
  for (int i = 0; i < f.n; ++i) ssr += std::pow(y[i] - (f.slope * x[i] + b), 2);
  f.stderr_ = f.n > 2 ? std::sqrt(ssr / (f.n - 2) / sxx) : 0.0;
  return f;
}

}  // namespace

ContactFit fit_contact_order(const Rif& phi, Axis axis, const SingularPoint& tau, const std::vector<SingularPoint>& all,
                             const FitConfig& cfg) {
  if (cfg.samples_per_side < 2) throw Error(ErrorCode::invalid_argument, "need at least two samples per side");
  double radius = 0.25;
  for (const auto& s : all) {
    const bool same_fiber = std::abs(s.tau(other(axis)) - tau.tau(other(axis))) < 1e-6;
    const double d = std::abs(s.tau(axis) - tau.tau(axis));
    if (same_fiber && d > 1e-6) radius = std::min(radius, 0.5 * d);
  }

  const int K = cfg.samples_per_side;
  const ComplexLD t(tau.tau(other(axis)).real(), tau.tau(other(axis)).imag());
  const auto raw = map_indexed<ContactSample>(static_cast<std::size_t>(2 * K), cfg.exec, [&](std::size_t i) {
    const double sign = i < static_cast<std::size_t>(K) ? 1.0 : -1.0;
    const int k = static_cast<int>(i) % K;
    const double delta = cfg.delta_max * std::pow(cfg.delta_min / cfg.delta_max, double(k) / double(K - 1));
    const ComplexLD zl = t * std::polar(1.0L, static_cast<long double>(sign * delta));
    double eps = std::numeric_limits<double>::quiet_NaN();
    try {
      eps = static_cast<double>(epsilon_ld(phi, axis, zl, &tau, radius));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::degenerate_slice) throw;
    }
    return ContactSample{sign * delta, eps};
  });

  ContactFit fit;
  fit.tau = tau;
  fit.axis = axis;
  std::vector<double> xs[2], ys[2];
  for (const auto& s : raw) {
    if (!std::isfinite(s.eps) || s.eps <= cfg.eps_floor) continue;
    fit.samples.push_back(s);
    const int side = s.delta > 0 ? 0 : 1;
    xs[side].push_back(std::log(2.0 * std::sin(0.5 * std::abs(s.delta))));
    ys[side].push_back(std::log(s.eps));
  }
  if (static_cast<int>(fit.samples.size()) < cfg.min_samples)
    throw Error(ErrorCode::insufficient_samples, "too few valid epsilon samples for a contact fit");
  const LineFit plus = least_squares(xs[0], ys[0]), minus = least_squares(xs[1], ys[1]);
  const bool use_plus = static_cast<int>(xs[0].size()) >= cfg.min_samples;
  const bool use_minus = static_cast<int>(xs[1].size()) >= cfg.min_samples;
  fit.slope_plus = plus.slope;
  fit.slope_minus = minus.slope;
  if (use_plus && (!use_minus || plus.slope >= minus.slope)) {
    fit.slope = plus.slope;
    fit.slope_stderr = plus.stderr_;
  } else if (use_minus) {
    fit.slope = minus.slope;
    fit.slope_stderr = minus.stderr_;
  } else {
    std::vector<double> x = xs[0], y = ys[0];
    x.insert(x.end(), xs[1].begin(), xs[1].end());
    y.insert(y.end(), ys[1].begin(), ys[1].end());
    const LineFit both = least_squares(x, y);
    fit.slope = both.slope;
    fit.slope_stderr = both.stderr_;
  }
  fit.K_rational = snap_rational(fit.slope, cfg.max_denom, cfg.snap_tol);
  return fit;
}

ContactReport contact_report(const Rif& phi, const ContactConfig& cfg) {
  ContactReport rep;
  rep.singularities = find_singularities(phi, cfg.scan);
  for (const auto& s : rep.singularities)
    for (Axis a : {Axis::z1, Axis::z2}) {
      if (phi.degree_in(a) == 0) continue;
      rep.fits.push_back(fit_contact_order(phi, a, s, rep.singularities, cfg.fit));
    }
  for (Axis a : {Axis::z1, Axis::z2}) {
    double K = 0.0;
    std::optional<Rational> Kr;
    for (const auto& f : rep.fits)
      if (f.axis == a && f.K() > K) {
        K = f.K();
        Kr = f.K_rational;
      }
    const double thr = K > 0 ? 1.0 + 1.0 / K : std::numeric_limits<double>::infinity();
    if (a == Axis::z1) {
      rep.K1 = K, rep.K1_rational = Kr, rep.hp_threshold_1 = thr;
    } else {
      rep.K2 = K, rep.K2_rational = Kr, rep.hp_threshold_2 = thr;
    }
  }
  return rep;
}

}  // namespace riflab
