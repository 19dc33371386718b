#include "riflab/roots1.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace riflab {

namespace {

template <class T>
struct EvalPair {
  std::complex<T> q;
  std::complex<T> dq;
};

template <class T>
EvalPair<T> horner2(const std::vector<std::complex<T>>& c, std::complex<T> z) {
  std::complex<T> q(0), dq(0);
  for (std::size_t k = c.size(); k-- > 0;) {
    dq = dq * z + q;
    q = q * z + c[k];
  }
  return {q, dq};
}

}  // namespace

template <class T>
BasicRootSet<T> roots(const BasicUniPoly<T>& q_in, const RootConfig& cfg) {
  using C = std::complex<T>;
  if (q_in.is_zero()) throw Error(ErrorCode::zero_polynomial, "root finding on the zero polynomial");
  BasicUniPoly<T> q = q_in;
  q.tighten(T(1e-14));
  if (q.degree() < 1) throw Error(ErrorCode::invalid_argument, "root finding needs degree >= 1");

  BasicRootSet<T> out;
  // Exact zero roots are split off first.
  std::size_t shift = 0;
  while (shift < q.c.size() && q.c[shift] == C(0)) ++shift;
  for (std::size_t i = 0; i < shift; ++i) out.roots.push_back(C(0));
  const std::vector<C> c(q.c.begin() + static_cast<std::ptrdiff_t>(shift), q.c.end());
  const int n = static_cast<int>(c.size()) - 1;

  const T eps = std::numeric_limits<T>::epsilon();
  if (n == 1) {
    C z = -c[0] / c[1];
    out.roots.push_back(z);
  } else if (n > 1) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const T radius = std::pow(std::abs(c[0]) / std::abs(c[n]), T(1) / T(n));
    const T offset = T(jitter(rng)) * T(2) * kPiLD / T(n);
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i) {
      const T th = offset + T(2) * kPiLD * T(i) / T(n);
      const T r = radius * (T(1) + T(0.01) * T(jitter(rng)));
      z[i] = std::polar(r, th);
    }
    std::vector<bool> done(n, false);
    int iter = 0;
    for (; iter < cfg.max_iter; ++iter) {
      int active = 0;
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        const auto [qv, dqv] = horner2(c, z[i]);
        T scale = 0;
        {
          const T r = std::abs(z[i]);
          for (std::size_t k = c.size(); k-- > 0;) scale = scale * r + std::abs(c[k]);
        }
        if (std::abs(qv) <= T(4) * eps * scale) {
          done[i] = true;
          continue;
        }
        ++active;
        const C w = qv / dqv;
        C s(0);
        for (int j = 0; j < n; ++j)
          if (j != i) s += T(1) / (z[i] - z[j]);
        C step = w / (T(1) - w * s);
        if (!std::isfinite(std::abs(step))) step = w;
        z[i] -= step;
        if (std::abs(step) <= eps * std::abs(z[i])) done[i] = true;
      }
      if (active == 0) break;
    }
    for (int i = 0; i < n; ++i) out.roots.push_back(z[i]);
  }

  // Newton polish, accepted only when it lowers the residual.
  for (std::size_t i = shift; i < out.roots.size(); ++i) {
    C zi = out.roots[i];
    T res = std::abs(horner2(c, zi).q);
    for (int s = 0; s < cfg.polish_steps; ++s) {
      const auto [qv, dqv] = horner2(c, zi);
      if (dqv == C(0)) break;
      const C cand = zi - qv / dqv;
      const T rc = std::abs(horner2(c, cand).q);
      if (!(rc < res)) break;
      zi = cand;
      res = rc;
    }
    out.roots[i] = zi;
  }

  out.residuals.resize(out.roots.size());
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const C zi = out.roots[i];
    out.residuals[i] = std::abs(q(zi));
    out.condition = std::max(out.condition, out.residuals[i]);
    const T tol = std::max(T(cfg.tol_residual), T(64) * eps) * q.eval_scale(zi);
    if (!(out.residuals[i] <= tol))
      throw Error(ErrorCode::no_convergence, "Aberth iteration did not reach the residual tolerance");
  }
  return out;
}

template BasicRootSet<double> roots<double>(const BasicUniPoly<double>&, const RootConfig&);
template BasicRootSet<long double> roots<long double>(const BasicUniPoly<long double>&, const RootConfig&);

}  // namespace riflab
