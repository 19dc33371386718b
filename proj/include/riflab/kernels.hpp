#pragma once

#include <cstdint>
#include <vector>

#include "riflab/quadrature.hpp"
#include "riflab/rif.hpp"

namespace riflab {

/// Vectors in |p|^2 - |ptilde|^2 = (1 - |z1|^2) |E1|^2 + (1 - |z2|^2) |F2|^2.
struct AglerVectors {
  std::vector<BiPoly> E1;
  std::vector<BiPoly> F2;
};

struct ResidualStats {
  double max_abs = 0.0;
  double mean_abs = 0.0;
  int sample_count = 0;
};

/// Residual of the Agler identity at `samples` seeded points of the open bidisk.
ResidualStats verify_agler(const Rif& phi, const AglerVectors& v, int samples = 1000, std::uint64_t seed = 42,
                           Exec exec = Exec::serial);

struct LocalDirichletConfig {
  int min_points = 128;
  int max_points = 2048;
  double rel_tol = 1e-10;
};

/// Local Dirichlet integral at an interior point from boundary values of phi.
QuadratureResult local_dirichlet_boundary(const Rif& phi, Complex z1, Complex z2, const LocalDirichletConfig& cfg = {});

/// The same quantity from the one-variable kernel integrals of the Agler
/// vectors; z may lie on the torus away from singularities.
QuadratureResult local_dirichlet_kernel(const Rif& phi, const AglerVectors& v, Complex z1, Complex z2,
                                        const LocalDirichletConfig& cfg = {});

struct DougConfig {
  std::vector<int> ladder{16, 32, 64, 128};
  /// Stop once two consecutive levels agree this closely.
  double early_stop = 1e-12;
  double rel_tol = 1e-6;
  double growth_tol = 0.05;
  Exec exec = Exec::serial;
};

/// Doug(f) = |f(0)|^2 + D(f(., 0)) + D(f(0, .)) + the T^4 second-difference
/// term, each by the trapezoid rule on a half-offset uniform grid with the
/// diagonal filled by derivative limits.
QuadratureResult doug_quadrature(const RationalFn& f, const DougConfig& cfg = {});
QuadratureResult doug_quadrature(const Rif& phi, const DougConfig& cfg = {});

/// |a00|^2 + sum k |a_k0|^2 + sum l |a_0l|^2 + sum k l |a_kl|^2 for a polynomial.
double doug_coefficients(const BiPoly& f);

}  // namespace riflab
