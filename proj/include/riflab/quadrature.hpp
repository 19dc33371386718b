#pragma once

#include <array>
#include <string>
#include <vector>

#include "riflab/common.hpp"

namespace riflab {

enum class Verdict { converged, diverging, unresolved };
const char* to_string(Verdict v);

struct QuadLevel {
  long long n = 0;  // quadrature nodes used at this level
  double estimate = 0.0;
};

struct QuadratureResult {
  /// Reported quantity (+inf when diverging).
  double value = 0.0;
  std::vector<QuadLevel> levels;
  Verdict classification = Verdict::unresolved;
  /// Slope of log(estimate) against log(n) over the ladder.
  double growth_exponent = 0.0;
  /// Relative change between the last two levels.
  double tolerance_achieved = 0.0;
  /// Largest fitted cell ratio near a singular fiber (0 without singular fibers).
  double tail_ratio = 0.0;
};

/// 12-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  static constexpr int size = 12;
  std::array<long double, size> x;
  std::array<long double, size> w;
};
const GaussRule& gauss12();

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares slope of log(estimate) against log(n).
double fit_growth_exponent(const std::vector<QuadLevel>& levels);

/// Fills growth_exponent and tolerance_achieved, and classifies by
/// growth > growth_tol (diverging) or last two levels within rel_tol.
void classify_ladder(QuadratureResult& r, double rel_tol, double growth_tol = 0.05);

}  // namespace riflab
