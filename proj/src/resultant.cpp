#include "riflab/resultant.hpp"

#include <Eigen/Dense>

namespace riflab {

UniPoly resultant(const BiPoly& p, const BiPoly& q, Axis eliminated, int deg_p, int deg_q) {
  const Axis keep = other(eliminated);
  const int size = deg_p + deg_q;
  if (size == 0) return UniPoly({Complex(1.0)});
  const int other_p = keep == Axis::z2 ? p.n() : p.m();
  const int other_q = keep == Axis::z2 ? q.n() : q.m();
  const int bound = deg_p * other_q + deg_q * other_p;
  const int M = bound + 1;

  std::vector<Complex> values(M);
  for (int j = 0; j < M; ++j) {
    const Complex w = std::polar(1.0, 2.0 * kPi * j / M);
    UniPoly a = p.slice_raw<double>(keep, w), b = q.slice_raw<double>(keep, w);
    a.c.resize(deg_p + 1);
    b.c.resize(deg_q + 1);
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(size, size);
    for (int r = 0; r < deg_q; ++r)
      for (int k = 0; k <= deg_p; ++k) S(r, r + k) = a.c[deg_p - k];
    for (int r = 0; r < deg_p; ++r)
      for (int k = 0; k <= deg_q; ++k) S(deg_q + r, r + k) = b.c[deg_q - k];
    values[j] = S.partialPivLu().determinant();
  }
  std::vector<Complex> coeffs(M);
  for (int k = 0; k < M; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < M; ++j) acc += values[j] * std::polar(1.0, -2.0 * kPi * double(j) * k / M);
    coeffs[k] = acc / double(M);
  }
  UniPoly r(std::move(coeffs));
  r.tighten(1e-11);
  return r;
}

std::vector<Cluster> cluster_points(const std::vector<Complex>& pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<int> label(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < n; ++b)
        if (label[b] < 0 && std::abs(pts[a] - pts[b]) < radius) {
          label[b] = next;
          stack.push_back(b);
        }
    }
    ++next;
  }
  std::vector<Cluster> out(next);
  for (std::size_t i = 0; i < n; ++i) {
    out[label[i]].center += pts[i];
    out[label[i]].size += 1;
  }
  for (auto& c : out) c.center /= double(c.size);
  return out;
}

Complex polish_cluster(const UniPoly& q, Complex center, int size) {
  UniPolyLD d(std::vector<ComplexLD>(q.c.begin(), q.c.end()));
  for (int i = 1; i < size; ++i) d = d.derivative();
  if (d.degree() < 1) return center;
  const UniPolyLD dd = d.derivative();
  ComplexLD z(center.real(), center.imag());
  for (int it = 0; it < 20; ++it) {
    const ComplexLD den = dd(z);
    if (den == ComplexLD(0)) break;
    const ComplexLD step = d(z) / den;
    z -= step;
    if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(z))) break;
  }
  const Complex out(double(z.real()), double(z.imag()));
  // Keep the centroid if Newton wandered off.
  return std::abs(out - center) < 1e-2 ? out : center;
}

}  // namespace riflab
