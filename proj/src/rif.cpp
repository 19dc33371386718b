#include "riflab/rif.hpp"

namespace riflab {

Rif make_rif(const BiPoly& p_in, std::optional<Bidegree> degree, const StabilityConfig& cfg) {
  BiPoly p = p_in;
  p.tighten();
  if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "denominator is identically zero");
  const Bidegree d = degree.value_or(p.bidegree());
  if (d.m < p.m() || d.n < p.n()) throw Error(ErrorCode::invalid_argument, "declared degree below the bidegree of p");
  if (std::abs(p.coeff(0, 0)) <= 1e-14 * p.max_abs()) throw Error(ErrorCode::zero_constant_term, "p(0,0) vanishes");
  const StabilityReport st = is_stable(p, cfg);
  if (!st.stable) throw Error(ErrorCode::unstable_denominator, "p has zeros in the open bidisk");

  Rif r;
  r.p_ = p;
  r.pt_ = reflect(p, d);
  r.deg_ = d;
  for (Axis a : {Axis::z1, Axis::z2})
    r.q_[index_of(a)] = r.p_ * partial(r.pt_, a) - r.pt_ * partial(r.p_, a);
  return r;
}

Complex eval_phi(const Rif& phi, Complex z1, Complex z2) {
  const Complex den = phi.p()(z1, z2);
  if (std::abs(den) < 1e-14 * phi.p().eval_scale(z1, z2))
    throw Error(ErrorCode::denominator_vanishes, "p vanishes at the evaluation point");
  return phi.ptilde()(z1, z2) / den;
}

RationalFn partial_derivative(const Rif& phi, Axis axis) {
  return RationalFn{phi.deriv_num(axis), phi.p() * phi.p()};
}

SeriesGrid taylor(const Rif& phi, int N, Exec exec) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "negative order");
  return multiply(phi.ptilde(), inv_series(phi.p(), N, exec), exec);
}

std::pair<UniPoly, UniPoly> slice_blaschke(const Rif& phi, Axis fixed, Complex zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw Error(ErrorCode::invalid_argument, "slice point must be unimodular");
  // Pad both to the declared degree in the free variable.
  auto pad = [&](UniPoly q) {
    q.c.resize(static_cast<std::size_t>(phi.degree_in(other(fixed))) + 1);
    return q;
  };
  return {pad(phi.ptilde().slice_raw<double>(fixed, zeta)), pad(phi.p().slice_raw<double>(fixed, zeta))};
}

RationalFn derivative(const RationalFn& f, Axis axis) {
  return RationalFn{partial(f.num, axis) * f.den - f.num * partial(f.den, axis), f.den * f.den};
}

}  // namespace riflab
