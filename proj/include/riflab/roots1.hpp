#pragma once

#include <cstdint>
#include <vector>

#include "riflab/poly2.hpp"

namespace riflab {

struct RootConfig {
  int max_iter = 200;
  double tol_residual = 1e-13;
  int polish_steps = 3;
  std::uint64_t seed = 42;
};

template <class T>
struct BasicRootSet {
  std::vector<std::complex<T>> roots;
  std::vector<T> residuals;
  T condition = 0;
};

using RootSet = BasicRootSet<double>;
using RootSetLD = BasicRootSet<long double>;

/// All roots of q (after tightening) by Aberth-Ehrlich iteration.
template <class T>
BasicRootSet<T> roots(const BasicUniPoly<T>& q, const RootConfig& cfg = {});

extern template BasicRootSet<double> roots<double>(const BasicUniPoly<double>&, const RootConfig&);
extern template BasicRootSet<long double> roots<long double>(const BasicUniPoly<long double>&, const RootConfig&);

/// min over roots of 1 - |root|.
template <class T>
T min_dist_to_circle(const BasicRootSet<T>& rs) {
  if (rs.roots.empty()) throw Error(ErrorCode::invalid_argument, "empty root set");
  T best = T(1) - std::abs(rs.roots[0]);
  for (const auto& r : rs.roots) best = std::min(best, T(1) - std::abs(r));
  return best;
}

}  // namespace riflab
