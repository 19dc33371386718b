#include "riflab/poly2.hpp"

#include <algorithm>
#include <limits>

#include "riflab/parallel.hpp"
#include "riflab/roots1.hpp"

namespace riflab {

Axis axis_from_int(int a) {
  if (a == 1) return Axis::z1;
  if (a == 2) return Axis::z2;
  throw Error(ErrorCode::invalid_argument, "axis must be 1 or 2");
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "Parse";
    case ErrorCode::zero_constant_term: return "ZeroConstantTerm";
    case ErrorCode::unstable_denominator: return "UnstableDenominator";
    case ErrorCode::degenerate_slice: return "DegenerateSlice";
    case ErrorCode::zero_polynomial: return "ZeroPolynomial";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::denominator_vanishes: return "DenominatorVanishes";
    case ErrorCode::insufficient_samples: return "InsufficientSamples";
    case ErrorCode::invalid_exponent: return "InvalidExponent";
    case ErrorCode::point_too_close_to_boundary: return "PointTooCloseToBoundary";
    case ErrorCode::singular_evaluation_point: return "SingularEvaluationPoint";
    case ErrorCode::pole_input: return "PoleInput";
    case ErrorCode::flat_gradient: return "FlatGradient";
    case ErrorCode::start_off_level: return "StartOffLevel";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Complex SeriesGrid::eval(Complex z1, Complex z2, int order) const {
  order = std::min(order, N);
  Complex acc = 0.0;
  for (int k = order; k >= 0; --k) {
    Complex row = 0.0;
    for (int l = order; l >= 0; --l) row = row * z2 + at(k, l);
    acc = acc * z1 + row;
  }
  return acc;
}

BiPoly::BiPoly(Bidegree shape) : m_(shape.m), n_(shape.n) {
  if (m_ < 0 || n_ < 0) throw Error(ErrorCode::invalid_argument, "negative bidegree");
  c_.assign(static_cast<std::size_t>(m_ + 1) * (n_ + 1), 0.0);
}

BiPoly::BiPoly(const Grid& grid) : m_(0), n_(0), c_(1) {
  if (grid.empty()) return;
  std::size_t cols = 0;
  for (const auto& row : grid) cols = std::max(cols, row.size());
  if (cols == 0) return;
  m_ = static_cast<int>(grid.size()) - 1;
  n_ = static_cast<int>(cols) - 1;
  c_.assign(grid.size() * cols, 0.0);
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (std::size_t l = 0; l < grid[k].size(); ++l) c_[idx(static_cast<int>(k), static_cast<int>(l))] = grid[k][l];
  tighten();
}

BiPoly BiPoly::constant(Complex v) {
  BiPoly p;
  p.c_[0] = v;
  return p;
}

BiPoly BiPoly::monomial(int k, int l, Complex v) {
  BiPoly p(Bidegree{k, l});
  p.at(k, l) = v;
  return p;
}

bool BiPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Complex v) { return v == Complex(0.0); });
}

double BiPoly::max_abs() const {
  double r = 0.0;
  for (const auto& v : c_) r = std::max(r, std::abs(v));
  return r;
}

BiPoly& BiPoly::tighten(double rel) {
  const double cut = rel * max_abs();
  for (auto& v : c_)
    if (std::abs(v) <= cut) v = 0.0;
  int m = 0, n = 0;
  for (int k = 0; k <= m_; ++k)
    for (int l = 0; l <= n_; ++l)
      if (c_[idx(k, l)] != Complex(0.0)) {
        m = std::max(m, k);
        n = std::max(n, l);
      }
  if (m == m_ && n == n_) return *this;
  BiPoly t(Bidegree{m, n});
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= n; ++l) t.at(k, l) = c_[idx(k, l)];
  *this = std::move(t);
  return *this;
}

double BiPoly::eval_scale(Complex z1, Complex z2) const {
  const double r1 = std::abs(z1), r2 = std::abs(z2);
  double acc = 0.0;
  for (int k = m_; k >= 0; --k) {
    double row = 0.0;
    for (int l = n_; l >= 0; --l) row = row * r2 + std::abs(c_[idx(k, l)]);
    acc = acc * r1 + row;
  }
  return acc;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

BiPoly& BiPoly::operator*=(Complex s) {
  for (auto& v : c_) v *= s;
  return tighten();
}

BiPoly operator*(Complex s, const BiPoly& a) {
  BiPoly r = a;
  r *= s;
  return r;
}

namespace {

BiPoly combine(const BiPoly& a, const BiPoly& b, double sign) {
  BiPoly r(Bidegree{std::max(a.m(), b.m()), std::max(a.n(), b.n())});
  for (int k = 0; k <= r.m(); ++k)
    for (int l = 0; l <= r.n(); ++l) r.at(k, l) = a.coeff(k, l) + sign * b.coeff(k, l);
  return r.tighten();
}

}  // namespace

BiPoly operator+(const BiPoly& a, const BiPoly& b) { return combine(a, b, 1.0); }
BiPoly operator-(const BiPoly& a, const BiPoly& b) { return combine(a, b, -1.0); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(Bidegree{a.m() + b.m(), a.n() + b.n()});
  for (int i = 0; i <= a.m(); ++i)
    for (int j = 0; j <= a.n(); ++j) {
      const Complex ac = a.coeff(i, j);
      if (ac == Complex(0.0)) continue;
      for (int k = 0; k <= b.m(); ++k)
        for (int l = 0; l <= b.n(); ++l) r.at(i + k, j + l) += ac * b.coeff(k, l);
    }
  return r.tighten();
}

Complex eval(const BiPoly& p, Complex z1, Complex z2) { return p(z1, z2); }

BiPoly reflect(const BiPoly& p, Bidegree at) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "reflection of the zero polynomial");
  if (at.m < p.m() || at.n < p.n())
    throw Error(ErrorCode::invalid_argument, "reflection degree below the bidegree of p");
  BiPoly r(at);
  for (int k = 0; k <= at.m; ++k)
    for (int l = 0; l <= at.n; ++l) r.at(k, l) = std::conj(p.coeff(at.m - k, at.n - l));
  return r.tighten();
}

BiPoly partial(const BiPoly& p, Axis axis) {
  if (axis == Axis::z1) {
    if (p.m() == 0) return BiPoly();
    BiPoly r(Bidegree{p.m() - 1, p.n()});
    for (int k = 1; k <= p.m(); ++k)
      for (int l = 0; l <= p.n(); ++l) r.at(k - 1, l) = double(k) * p.coeff(k, l);
    return r.tighten();
  }
  if (p.n() == 0) return BiPoly();
  BiPoly r(Bidegree{p.m(), p.n() - 1});
  for (int k = 0; k <= p.m(); ++k)
    for (int l = 1; l <= p.n(); ++l) r.at(k, l - 1) = double(l) * p.coeff(k, l);
  return r.tighten();
}

UniPoly slice(const BiPoly& p, Axis fixed, Complex value) {
  UniPoly q = p.slice_raw<double>(fixed, value);
  q.tighten();
  return q;
}

SeriesGrid inv_series(const BiPoly& p, int N, Exec exec) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "negative truncation order");
  const Complex c00 = p.coeff(0, 0);
  if (std::abs(c00) <= 1e-14 * std::max(1.0, p.max_abs()))
    throw Error(ErrorCode::zero_constant_term, "p(0,0) vanishes");
  SeriesGrid b(N);
  // Anti-diagonal wavefront: every cell on k + l = d depends only on lower d.
  for (int d = 0; d <= 2 * N; ++d) {
    const int k_lo = std::max(0, d - N), k_hi = std::min(d, N);
    const auto cells = map_indexed<Complex>(static_cast<std::size_t>(k_hi - k_lo + 1), exec, [&](std::size_t t) {
      const int k = k_lo + static_cast<int>(t);
      const int l = d - k;
      Complex acc = (k == 0 && l == 0) ? Complex(1.0) : Complex(0.0);
      for (int i = 0; i <= std::min(p.m(), k); ++i)
        for (int j = 0; j <= std::min(p.n(), l); ++j) {
          if (i == 0 && j == 0) continue;
          acc -= p.coeff(i, j) * b.at(k - i, l - j);
        }
      return acc / c00;
    });
    for (int k = k_lo; k <= k_hi; ++k) b.at(k, d - k) = cells[static_cast<std::size_t>(k - k_lo)];
  }
  return b;
}

SeriesGrid multiply(const BiPoly& p, const SeriesGrid& s, Exec exec) {
  SeriesGrid out(s.N);
  const int N = s.N;
  const auto rows = map_indexed<std::vector<Complex>>(static_cast<std::size_t>(N + 1), exec, [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    std::vector<Complex> row(N + 1);
    for (int l = 0; l <= N; ++l) {
      Complex acc = 0.0;
      for (int i = 0; i <= std::min(p.m(), k); ++i)
        for (int j = 0; j <= std::min(p.n(), l); ++j) acc += p.coeff(i, j) * s.at(k - i, l - j);
      row[l] = acc;
    }
    return row;
  });
  for (int k = 0; k <= N; ++k)
    for (int l = 0; l <= N; ++l) out.at(k, l) = rows[k][l];
  return out;
}

BiPoly compose_mobius(const BiPoly& p, Complex a, Complex b, Bidegree at) {
  if (at.m < p.m() || at.n < p.n()) throw Error(ErrorCode::invalid_argument, "degree below the bidegree of p");
  // Sum c_kl (z1 - a)^k (1 - conj(a) z1)^(m-k) (z2 - b)^l (1 - conj(b) z2)^(n-l).
  const BiPoly num1 = BiPoly(Grid{{-a}, {1.0}});
  const BiPoly den1 = BiPoly(Grid{{1.0}, {-std::conj(a)}});
  const BiPoly num2 = BiPoly(Grid{{-b, 1.0}});
  const BiPoly den2 = BiPoly(Grid{{1.0, -std::conj(b)}});
  auto power = [](const BiPoly& x, int e) {
    BiPoly r = BiPoly::constant(1.0);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
  };
  BiPoly out(Bidegree{at.m, at.n});
  for (int k = 0; k <= p.m(); ++k)
    for (int l = 0; l <= p.n(); ++l) {
      const Complex c = p.coeff(k, l);
      if (c == Complex(0.0)) continue;
      out = out + c * (power(num1, k) * power(den1, at.m - k) * power(num2, l) * power(den2, at.n - l));
    }
  return out.tighten();
}

namespace {

// min | |root| - 1 | over the roots of p(., e^{i theta}) with the other variable fixed.
double circle_gap(const BiPoly& p, Axis fixed, double theta) {
  UniPoly q = slice(p, fixed, std::polar(1.0, theta));
  if (q.is_zero()) throw Error(ErrorCode::degenerate_slice, "slice vanishes identically");
  if (q.degree() < 1) return std::numeric_limits<double>::infinity();
  const RootSet rs = roots(q);
  double g = std::numeric_limits<double>::infinity();
  for (const auto& r : rs.roots) g = std::min(g, std::abs(std::abs(r) - 1.0));
  return g;
}

}  // namespace

StabilityReport is_stable(const BiPoly& p, const StabilityConfig& cfg) {
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "stability of the zero polynomial");
  if (cfg.radii < 2 || cfg.angles < 1) throw Error(ErrorCode::invalid_argument, "stability grid too small");
  StabilityReport rep;
  rep.min_root_modulus = std::numeric_limits<double>::infinity();
  rep.boundary_gap = std::numeric_limits<double>::infinity();

  const int R = cfg.radii, A = cfg.angles;
  struct Cell {
    double min_mod;
    double gap;
  };
  for (Axis fixed : {Axis::z2, Axis::z1}) {
    const auto cells = map_indexed<Cell>(static_cast<std::size_t>(R) * A, cfg.exec, [&](std::size_t t) {
      const int i = static_cast<int>(t) / A, j = static_cast<int>(t) % A;
      const double r = (i == R - 1) ? 1.0 : (1.0 - cfg.delta_margin) * double(i) / double(R - 1);
      const double th = 2.0 * kPi * double(j) / double(A);
      UniPoly q = slice(p, fixed, std::polar(r, th));
      if (q.is_zero()) throw Error(ErrorCode::degenerate_slice, "slice vanishes identically");
      Cell c{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
      if (q.degree() < 1) return c;
      const RootSet rs = roots(q);
      for (const auto& z : rs.roots) {
        c.min_mod = std::min(c.min_mod, std::abs(z));
        if (i == R - 1) c.gap = std::min(c.gap, std::abs(std::abs(z) - 1.0));
      }
      return c;
    });
    int best_j = 0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < cells.size(); ++t) {
      rep.min_root_modulus = std::min(rep.min_root_modulus, cells[t].min_mod);
      if (cells[t].gap < best_gap) {
        best_gap = cells[t].gap;
        best_j = static_cast<int>(t) % A;
      }
    }
    // Golden-section refinement of the closest approach on the torus.
    if (std::isfinite(best_gap)) {
      const double h = 2.0 * kPi / A;
      double lo = 2.0 * kPi * best_j / A - h, hi = lo + 2.0 * h;
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
      double f1 = circle_gap(p, fixed, x1), f2 = circle_gap(p, fixed, x2);
      for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - gr * (hi - lo);
          f1 = circle_gap(p, fixed, x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + gr * (hi - lo);
          f2 = circle_gap(p, fixed, x2);
        }
      }
      best_gap = std::min({best_gap, f1, f2});
    }
    rep.boundary_gap = std::min(rep.boundary_gap, best_gap);
  }
  rep.stable = rep.min_root_modulus >= 1.0 - cfg.tol_root;
  rep.boundary_zero = rep.boundary_gap < cfg.boundary_tol;
  return rep;
}

}  // namespace riflab
