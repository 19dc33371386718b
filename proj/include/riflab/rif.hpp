#pragma once

#include <optional>
#include <utility>

#include "riflab/poly2.hpp"

namespace riflab {

struct RationalFn {
  BiPoly num;
  BiPoly den;

  template <class T>
  std::complex<T> eval(std::complex<T> z1, std::complex<T> z2) const {
    return num.eval<T>(z1, z2) / den.eval<T>(z1, z2);
  }
  Complex operator()(Complex z1, Complex z2) const { return eval<double>(z1, z2); }
};

/// Quotient-rule derivative.
RationalFn derivative(const RationalFn& f, Axis axis);

/// phi = ptilde / p for a stable p, with the reflection taken at `degree`.
class Rif {
 public:
  const BiPoly& p() const { return p_; }
  const BiPoly& ptilde() const { return pt_; }
  Bidegree degree() const { return deg_; }
  /// p * d(ptilde)/dz_j - ptilde * dp/dz_j.
  const BiPoly& deriv_num(Axis a) const { return q_[index_of(a)]; }
  int degree_in(Axis a) const { return a == Axis::z1 ? deg_.m : deg_.n; }

  template <class T>
  std::complex<T> eval(std::complex<T> z1, std::complex<T> z2) const {
    return pt_.eval<T>(z1, z2) / p_.eval<T>(z1, z2);
  }

 private:
  friend Rif make_rif(const BiPoly&, std::optional<Bidegree>, const StabilityConfig&);
  BiPoly p_;
  BiPoly pt_;
  Bidegree deg_;
  BiPoly q_[2];
};

/// Validates p (stable, p(0,0) != 0) and builds the RIF. `degree` defaults to
/// the tight bidegree of p and may only be larger.
Rif make_rif(const BiPoly& p, std::optional<Bidegree> degree = std::nullopt, const StabilityConfig& cfg = {});

Complex eval_phi(const Rif& phi, Complex z1, Complex z2);

RationalFn partial_derivative(const Rif& phi, Axis axis);

/// Taylor coefficients a_kl, 0 <= k, l <= N.
SeriesGrid taylor(const Rif& phi, int N, Exec exec = Exec::serial);

/// (slice of ptilde, slice of p) with `fixed` set to zeta; the ratio is the
/// one-variable Blaschke product in the free variable. Untightened.
std::pair<UniPoly, UniPoly> slice_blaschke(const Rif& phi, Axis fixed, Complex zeta);

}  // namespace riflab
