#pragma once

#include <vector>

#include "riflab/poly2.hpp"

namespace riflab {

/// Res_{eliminated}(p, q) as a polynomial in the other variable, with p and q
/// treated as having degrees deg_p, deg_q in the eliminated variable.
/// Computed from Sylvester determinants at roots of unity.
UniPoly resultant(const BiPoly& p, const BiPoly& q, Axis eliminated, int deg_p, int deg_q);

/// Groups points closer than `radius` (single linkage) and returns the
/// centroid and size of each group, in order of first appearance.
struct Cluster {
  Complex center;
  int size = 0;
};
std::vector<Cluster> cluster_points(const std::vector<Complex>& pts, double radius);

/// Sharpens the centre of a root cluster of size k by Newton's method on the
/// (k-1)-th derivative, where a k-fold root becomes simple.
Complex polish_cluster(const UniPoly& q, Complex center, int size);

}  // namespace riflab
