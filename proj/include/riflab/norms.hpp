#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "riflab/boundary.hpp"
#include "riflab/quadrature.hpp"

namespace riflab {

/// How the inner (fiber) integrand |d phi / d z_axis| is evaluated on T.
/// `blaschke` sums the Poisson-type terms of the slice zeros; `quotient`
/// evaluates |q_axis| / |p|^2 directly. They agree off the singular fibers.
enum class FiberRule { blaschke, quotient };

struct QuadConfig {
  int base_points = 256;
  int ladder = 4;
  double rel_tol = 1e-4;
  double exclusion_angle = 1e-2;
  int grading_levels = 12;
  /// Extra grading levels per ladder step.
  int grading_step = 4;
  double growth_tol = 0.05;
  /// A cell ratio within this of 1 near a singular fiber means divergence.
  double ratio_margin = 0.02;
  /// Fibers whose slice zeros come closer than this to T are not evaluated.
  double eps_floor = 1e-16;
  int inner_panels = 16;
  FiberRule rule = FiberRule::blaschke;
  ScanConfig scan;
  Exec exec = Exec::serial;
};

/// (1/2pi) * integral over T of |d phi/d z_axis|^p along the fiber where the
/// other variable equals e^{i theta}. NaN if the fiber is numerically singular.
long double fiber_mean(const Rif& phi, Axis axis, double p, long double theta, FiberRule rule = FiberRule::blaschke,
                       int base_panels = 16);

/// H^p norm of d phi / d z_axis over T^2 (normalized measure). The ladder
/// estimates are the integral means; `value` is mean^(1/p).
QuadratureResult hp_norm_derivative(const Rif& phi, Axis axis, double p, const QuadConfig& cfg = {});
QuadratureResult hp_norm_derivative(const Rif& phi, Axis axis, double p, const std::vector<SingularPoint>& sing,
                                    const QuadConfig& cfg);

struct H1Check {
  double value1 = 0.0;
  double value2 = 0.0;
  int m = 0;
  int n = 0;
};

H1Check h1_degree_check(const Rif& phi, const QuadConfig& cfg = {});

enum class Membership { member, not_member, inconclusive };
const char* to_string(Membership m);

struct DirichletConfig {
  double margin = 0.15;
  Exec exec = Exec::serial;
};

struct DirichletTail {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::vector<std::pair<int, double>> partial_sums;
  /// T_n for n = 0..N.
  std::vector<double> annular;
  Membership verdict = Membership::inconclusive;
  double tail_exponent = 0.0;
  /// Set when the verdict came from contact-order data rather than the tail.
  bool theorem_override = false;
};

DirichletTail dirichlet_partial(const SeriesGrid& a, double alpha1, double alpha2, int N,
                                const DirichletConfig& cfg = {});

DirichletTail inv_series_dirichlet(const BiPoly& p, double alpha, int N, const DirichletConfig& cfg = {});

/// Replaces an inconclusive isotropic verdict using the contact orders: alpha
/// below the cutoff min_i (1 + 1/K_i) / 2 is a member; alpha at the cutoff is not.
void apply_contact_override(DirichletTail& t, const ContactReport& contact);

struct MembershipReport {
  bool singular = false;
  /// d phi / d z_i lies in H^p exactly for p < hp_sup_i.
  double hp_sup_1 = 0.0;
  double hp_sup_2 = 0.0;
  /// No derivative lies in H^p for p >= 3/2 when singularities exist.
  bool excludes_three_halves = false;
  /// phi lies in D_(p,0) for p < d_p0_sup, and in D_(0,p) for p < d_0p_sup.
  double d_p0_sup = 0.0;
  double d_0p_sup = 0.0;
  /// phi lies in the isotropic D_alpha for alpha < d_alpha_sup.
  double d_alpha_sup = 0.0;
  /// phi lies in D_(a1,a2) when a1 < aniso_sup_1 and a2 < aniso_sup_2.
  double aniso_sup_1 = 0.0;
  double aniso_sup_2 = 0.0;
};

MembershipReport membership_table(const ContactReport& contact);

bool hp_member(const MembershipReport& m, Axis axis, double p);

}  // namespace riflab
