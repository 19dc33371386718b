#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "riflab/rif.hpp"

namespace riflab {

struct SingularPoint {
  Complex tau1;
  Complex tau2;
  double residual_p = 0.0;
  double residual_ptilde = 0.0;
  /// Number of merged resultant roots; a rough multiplicity estimate.
  int cluster_size = 0;

  Complex tau(Axis a) const { return a == Axis::z1 ? tau1 : tau2; }
};

struct ScanConfig {
  int angles = 4096;
  int refine_rounds = 3;
  double coarse_tol = 1e-2;
  double cluster_radius = 1e-6;
  double tol_singular = 1e-8;
  /// Roots of the resultant closer than this are averaged before use.
  double root_cluster_radius = 1e-3;
  double unimodular_tol = 1e-8;
  Exec exec = Exec::serial;
};

/// Common zeros of p and ptilde on the torus.
std::vector<SingularPoint> find_singularities(const Rif& phi, const ScanConfig& cfg = {});

/// min(1 - |z|) over zeros z (in the variable `axis`) of ptilde with the other
/// variable fixed at zeta. With `near`, only zeros within `radius` of
/// near->tau(axis) count; +inf if there are none.
double epsilon(const Rif& phi, Axis axis, Complex zeta, const SingularPoint* near = nullptr, double radius = 0.25);
/// Same, with zeta in extended precision (it is renormalized onto the circle).
long double epsilon_ld(const Rif& phi, Axis axis, ComplexLD zeta, const SingularPoint* near = nullptr,
                       double radius = 0.25);

struct Rational {
  long num = 0;
  long den = 1;
  double value() const { return double(num) / double(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Best approximation p/q with q <= max_denom, if it lies within tol.
std::optional<Rational> snap_rational(double x, int max_denom, double tol);

struct FitConfig {
  double delta_max = 1e-1;
  double delta_min = 1e-4;
  int samples_per_side = 25;
  int min_samples = 8;
  int max_denom = 8;
  double snap_tol = 0.05;
  /// Samples with epsilon below this are at the precision floor and skipped.
  double eps_floor = 1e-17;
  Exec exec = Exec::serial;
};

struct ContactSample {
  /// Signed angular offset of zeta from tau.
  double delta;
  double eps;
};

struct ContactFit {
  SingularPoint tau;
  Axis axis = Axis::z1;
  std::vector<ContactSample> samples;
  double slope = 0.0;
  double slope_stderr = 0.0;
  double slope_plus = 0.0;
  double slope_minus = 0.0;
  std::optional<Rational> K_rational;

  double K() const { return K_rational ? K_rational->value() : slope; }
};

/// Fits log epsilon against log|zeta - tau| for zeta approaching tau(other axis).
ContactFit fit_contact_order(const Rif& phi, Axis axis, const SingularPoint& tau,
                             const std::vector<SingularPoint>& all = {}, const FitConfig& cfg = {});

struct ContactConfig {
  ScanConfig scan;
  FitConfig fit;
};

struct ContactReport {
  std::vector<SingularPoint> singularities;
  std::vector<ContactFit> fits;
  double K1 = 0.0;
  double K2 = 0.0;
  std::optional<Rational> K1_rational;
  std::optional<Rational> K2_rational;
  double hp_threshold_1 = 0.0;
  double hp_threshold_2 = 0.0;

  double K(Axis a) const { return a == Axis::z1 ? K1 : K2; }
  double threshold(Axis a) const { return a == Axis::z1 ? hp_threshold_1 : hp_threshold_2; }
};

ContactReport contact_report(const Rif& phi, const ContactConfig& cfg = {});

}  // namespace riflab
