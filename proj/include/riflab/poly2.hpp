#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "riflab/common.hpp"

namespace riflab {

/// Univariate polynomial, c[k] is the coefficient of z^k.
template <class T>
struct BasicUniPoly {
  using C = std::complex<T>;
  std::vector<C> c{C(0)};

  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<C> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) c.push_back(C(0));
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const {
    for (const auto& v : c)
      if (v != C(0)) return false;
    return true;
  }
  T max_abs() const {
    T r = 0;
    for (const auto& v : c) r = std::max(r, std::abs(v));
    return r;
  }

  /// Drops trailing coefficients below rel * max|c|.
  BasicUniPoly& tighten(T rel = T(1e-14)) {
    const T cut = rel * max_abs();
    while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
    if (c.size() == 1 && std::abs(c[0]) <= cut) c[0] = C(0);
    return *this;
  }

  C operator()(C z) const {
    C acc(0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
  }

  /// Sum |c_k| |z|^k, the natural scale for the backward error of eval at z.
  T eval_scale(C z) const {
    const T r = std::abs(z);
    T acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * r + std::abs(c[k]);
    return acc;
  }

  BasicUniPoly derivative() const {
    if (c.size() <= 1) return BasicUniPoly();
    std::vector<C> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * T(k);
    return BasicUniPoly(std::move(d));
  }
};

using UniPoly = BasicUniPoly<double>;
using UniPolyLD = BasicUniPoly<long double>;

/// Truncated bivariate power series a[k][l], 0 <= k, l <= N.
struct SeriesGrid {
  int N = 0;
  std::vector<Complex> a;

  SeriesGrid() : a(1) {}
  explicit SeriesGrid(int order) : N(order), a(static_cast<std::size_t>(order + 1) * (order + 1)) {}

  Complex& at(int k, int l) { return a[static_cast<std::size_t>(k) * (N + 1) + l]; }
  const Complex& at(int k, int l) const { return a[static_cast<std::size_t>(k) * (N + 1) + l]; }

  /// Partial sum over k, l <= order at z.
  Complex eval(Complex z1, Complex z2, int order) const;
};

using Grid = std::vector<std::vector<Complex>>;

/// Bivariate polynomial on a dense grid; c(k, l) multiplies z1^k z2^l.
class BiPoly {
 public:
  BiPoly() : m_(0), n_(0), c_(1) {}
  /// Zero grid of the given shape. Not tightened.
  explicit BiPoly(Bidegree shape);
  /// Rows are indexed by k (power of z1). Tightened on construction.
  explicit BiPoly(const Grid& grid);

  static BiPoly constant(Complex v);
  static BiPoly monomial(int k, int l, Complex v = 1.0);

  int m() const { return m_; }
  int n() const { return n_; }
  Bidegree bidegree() const { return {m_, n_}; }

  Complex coeff(int k, int l) const {
    if (k < 0 || l < 0 || k > m_ || l > n_) return 0.0;
    return c_[idx(k, l)];
  }
  Complex& at(int k, int l) { return c_[idx(k, l)]; }

  bool is_zero() const;
  double max_abs() const;
  BiPoly& tighten(double rel = 1e-14);

  template <class T>
  std::complex<T> eval(std::complex<T> z1, std::complex<T> z2) const {
    using C = std::complex<T>;
    C acc(0);
    for (int k = m_; k >= 0; --k) {
      C row(0);
      for (int l = n_; l >= 0; --l) row = row * z2 + C(c_[idx(k, l)]);
      acc = acc * z1 + row;
    }
    return acc;
  }
  Complex operator()(Complex z1, Complex z2) const { return eval<double>(z1, z2); }

  /// Sum |c_kl| |z1|^k |z2|^l.
  double eval_scale(Complex z1, Complex z2) const;

  /// Substitutes `value` for the variable `fixed`; the result is a polynomial
  /// in the other variable. Untightened, so its length is always 1 + the
  /// bidegree in the free variable.
  template <class T>
  BasicUniPoly<T> slice_raw(Axis fixed, std::complex<T> value) const {
    using C = std::complex<T>;
    if (fixed == Axis::z2) {
      std::vector<C> out(m_ + 1);
      for (int k = 0; k <= m_; ++k) {
        C row(0);
        for (int l = n_; l >= 0; --l) row = row * value + C(c_[idx(k, l)]);
        out[k] = row;
      }
      return BasicUniPoly<T>(std::move(out));
    }
    std::vector<C> out(n_ + 1);
    for (int l = 0; l <= n_; ++l) {
      C col(0);
      for (int k = m_; k >= 0; --k) col = col * value + C(c_[idx(k, l)]);
      out[l] = col;
    }
    return BasicUniPoly<T>(std::move(out));
  }

  BiPoly operator-() const;
  BiPoly& operator*=(Complex s);
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(Complex s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.m_ == b.m_ && a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t idx(int k, int l) const { return static_cast<std::size_t>(k) * (n_ + 1) + l; }

  int m_;
  int n_;
  std::vector<Complex> c_;
};

Complex eval(const BiPoly& p, Complex z1, Complex z2);

/// z1^m z2^n conj(p(1/conj z1, 1/conj z2)) taken at bidegree `at`, which must
/// dominate the tight bidegree of p.
BiPoly reflect(const BiPoly& p, Bidegree at);
inline BiPoly reflect(const BiPoly& p) { return reflect(p, p.bidegree()); }

BiPoly partial(const BiPoly& p, Axis axis);

/// Substitutes `value` for `fixed`, tightened.
UniPoly slice(const BiPoly& p, Axis fixed, Complex value);

/// Coefficients of 1/p through order N in each variable.
SeriesGrid inv_series(const BiPoly& p, int N, Exec exec = Exec::serial);

/// Product of a polynomial and a series, truncated at the series order.
SeriesGrid multiply(const BiPoly& p, const SeriesGrid& s, Exec exec = Exec::serial);

/// (1 - conj(a) z1)^m (1 - conj(b) z2)^n p(m_a(z1), m_b(z2)) with
/// m_a(z) = (z - a) / (1 - conj(a) z), at bidegree `at`.
BiPoly compose_mobius(const BiPoly& p, Complex a, Complex b, Bidegree at);

struct StabilityConfig {
  int radii = 64;
  int angles = 256;
  double delta_margin = 0.0;
  double tol_root = 1e-9;
  double boundary_tol = 1e-6;
  Exec exec = Exec::serial;
};

struct StabilityReport {
  bool stable = false;
  double min_root_modulus = 0.0;
  bool boundary_zero = false;
  /// Smallest | |root| - 1 | found on the torus after refinement.
  double boundary_gap = 0.0;
};

StabilityReport is_stable(const BiPoly& p, const StabilityConfig& cfg = {});

}  // namespace riflab
