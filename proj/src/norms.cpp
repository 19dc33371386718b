#include "riflab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riflab/parallel.hpp"
#include "riflab/roots1.hpp"

namespace riflab {

const char* to_string(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::not_member: return "not_member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

using LD = long double;
constexpr LD kTwoPi = 2.0L * kPiLD;

struct Fiber {
  LD mean = std::numeric_limits<LD>::quiet_NaN();
  /// Smallest 1 - |alpha| over the slice zeros.
  LD min_gap = std::numeric_limits<LD>::infinity();
};

Fiber eval_fiber(const Rif& phi, Axis axis, double p, LD theta, FiberRule rule, int base_panels) {
  Fiber out;
  const int d = phi.degree_in(axis);
  if (d == 0) {
    out.mean = 0;
    return out;
  }
  const ComplexLD zo = std::polar(1.0L, theta);
  UniPolyLD num = phi.ptilde().slice_raw<LD>(other(axis), zo);
  num.c.resize(static_cast<std::size_t>(d) + 1);
  if (std::abs(num.c[d]) <= 1e-14L * num.max_abs()) return out;
  std::vector<ComplexLD> alpha;
  try {
    alpha = roots(num).roots;
  } catch (const Error&) {
    return out;
  }
  // Angles are offsets from the zero closest to T, so the peak there is
  // resolved without cancellation against 2 pi.
  std::size_t ref = 0;
  std::vector<LD> gap(alpha.size()), rad(alpha.size()), centre(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    rad[j] = std::abs(alpha[j]);
    gap[j] = 1.0L - rad[j];
    out.min_gap = std::min(out.min_gap, gap[j]);
    if (gap[j] < gap[ref]) ref = j;
  }
  if (out.min_gap <= 0) return out;
  const LD c0 = alpha.empty() ? 0.0L : std::arg(alpha[ref]);
  auto wrap = [](LD u) {
    u = std::fmod(u + kPiLD, kTwoPi);
    if (u < 0) u += kTwoPi;
    return u - kPiLD;
  };
  std::vector<LD> breaks;
  for (int i = 0; i < base_panels; ++i) breaks.push_back(-kPiLD + kTwoPi * LD(i) / LD(base_panels));
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    centre[j] = j == ref ? 0.0L : wrap(std::arg(alpha[j]) - c0);
    if (gap[j] >= 0.5L) continue;
    breaks.push_back(centre[j]);
    for (LD h = gap[j]; h < kPiLD; h *= 2) {
      if (centre[j] + h < kPiLD) breaks.push_back(centre[j] + h);
      if (centre[j] - h > -kPiLD) breaks.push_back(centre[j] - h);
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  UniPolyLD qs, ps;
  if (rule == FiberRule::quotient) {
    qs = phi.deriv_num(axis).slice_raw<LD>(other(axis), zo);
    ps = phi.p().slice_raw<LD>(other(axis), zo);
  }
  const GaussRule& g = gauss12();
  const LD pp = p;
  LD total = 0;
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const LD a = breaks[i];
    const LD b = (i + 1 < breaks.size()) ? breaks[i + 1] : breaks[0] + kTwoPi;
    const LD mid = 0.5L * (a + b), half = 0.5L * (b - a);
    LD panel = 0;
    for (int k = 0; k < GaussRule::size; ++k) {
      const LD u = mid + half * g.x[k];
      LD s = 0;
      if (rule == FiberRule::blaschke) {
        // (1 - |a|^2) / |z - a|^2 with |z - a|^2 = (1 - r)^2 + 4 r sin^2(du / 2).
        for (std::size_t j = 0; j < alpha.size(); ++j) {
          const LD sn = std::sin(0.5L * (u - centre[j]));
          s += gap[j] * (2.0L - gap[j]) / (gap[j] * gap[j] + 4.0L * rad[j] * sn * sn);
        }
      } else {
        const ComplexLD z = std::polar(1.0L, c0 + u);
        s = std::abs(qs(z)) / std::norm(ps(z));
      }
      panel += g.w[k] * std::pow(s, pp);
    }
    total += half * panel;
  }
  out.mean = total / kTwoPi;
  return out;
}

struct OuterNode {
  LD theta;
  LD weight;
  int end;   // -1 for nodes outside the graded cells
  int cell;
};

struct EndTail {
  LD sum = 0;
  LD tail = 0;
  LD ratio = 0;
  bool diverging = false;
  int cells_used = 0;
};

// Sum of cells plus the extrapolated remainder, modelling c_g = A rho^g + B 2^-g.
EndTail extrapolate(const std::vector<LD>& c, double margin) {
  EndTail t;
  const int G = static_cast<int>(c.size());
  t.cells_used = G;
  for (LD v : c) t.sum += v;
  if (G == 0) return t;
  if (G < 3) {
    t.tail = c.back();
    return t;
  }
  auto e = [&](int g) { return c[g + 1] - 0.5L * c[g]; };
  const LD e1 = e(G - 2), e0 = e(G - 3);
  const LD cl = c[G - 1];
  if (std::abs(e1) <= 1e-6L * std::abs(cl) || e0 == 0) {
    t.ratio = 0.5L;
    t.tail = cl;
    return t;
  }
  const LD rho = e1 / e0;
  t.ratio = rho;
  if (rho >= 1.0L - LD(margin)) {
    t.diverging = true;
    t.tail = std::numeric_limits<LD>::infinity();
    return t;
  }
  if (rho <= 0 || std::abs(rho - 0.5L) < 1e-3L) {
    t.tail = cl;
    return t;
  }
  const LD a_last = e1 / (rho - 0.5L) * rho;  // A rho^(G-1)
  const LD b_last = cl - a_last;              // B 2^-(G-1)
  t.tail = a_last * rho / (1.0L - rho) + b_last;
  return t;
}

}  // namespace

long double fiber_mean(const Rif& phi, Axis axis, double p, long double theta, FiberRule rule, int base_panels) {
  return eval_fiber(phi, axis, p, theta, rule, base_panels).mean;
}

QuadratureResult hp_norm_derivative(const Rif& phi, Axis axis, double p, const QuadConfig& cfg) {
  if (p < 1.0) throw Error(ErrorCode::invalid_exponent, "H^p quadrature needs p >= 1");
  return hp_norm_derivative(phi, axis, p, find_singularities(phi, cfg.scan), cfg);
}

QuadratureResult hp_norm_derivative(const Rif& phi, Axis axis, double p, const std::vector<SingularPoint>& sing,
                                    const QuadConfig& cfg) {
  if (p < 1.0) throw Error(ErrorCode::invalid_exponent, "H^p quadrature needs p >= 1");
  if (cfg.ladder < 2) throw Error(ErrorCode::invalid_argument, "quadrature ladder needs at least two levels");

  // Angles of the outer variable where the fibers are singular.
  std::vector<LD> sing_angles;
  for (const auto& s : sing) {
    LD a = std::arg(ComplexLD(s.tau(other(axis)).real(), s.tau(other(axis)).imag()));
    if (a < 0) a += kTwoPi;
    sing_angles.push_back(a);
  }
  std::sort(sing_angles.begin(), sing_angles.end());
  sing_angles.erase(std::unique(sing_angles.begin(), sing_angles.end(),
                                [](LD a, LD b) { return std::abs(a - b) < 1e-9L; }),
                    sing_angles.end());

  QuadratureResult res;
  std::vector<EndTail> last_tails;
  const GaussRule& g = gauss12();
  for (int L = 0; L < cfg.ladder; ++L) {
    std::vector<OuterNode> nodes;
    int n_ends = 0;
    std::vector<int> cells_per_end;
    if (sing_angles.empty()) {
      const long long N = static_cast<long long>(cfg.base_points) << L;
      for (long long j = 0; j < N; ++j) nodes.push_back({kTwoPi * LD(j) / LD(N), kTwoPi / LD(N), -1, 0});
    } else {
      const int G = cfg.grading_levels + cfg.grading_step * L;
      const std::size_t S = sing_angles.size();
      for (std::size_t s = 0; s < S; ++s) {
        const LD a0 = sing_angles[s];
        const LD a1 = (s + 1 < S) ? sing_angles[s + 1] : sing_angles[0] + kTwoPi;
        const LD half_arc = 0.5L * (a1 - a0);
        const LD e = std::min<LD>(cfg.exclusion_angle, 0.5L * half_arc);
        for (int side = 0; side < 2; ++side) {
          const LD origin = side == 0 ? a0 : a1;
          const LD dir = side == 0 ? 1.0L : -1.0L;
          const int end = n_ends++;
          cells_per_end.push_back(G);
          auto add_panel = [&](LD lo, LD hi, int tag_end, int cell) {
            const LD mid = 0.5L * (lo + hi), half = 0.5L * (hi - lo);
            for (int k = 0; k < GaussRule::size; ++k)
              nodes.push_back({origin + dir * (mid + half * g.x[k]), half * g.w[k], tag_end, cell});
          };
          for (int c = 0; c < G; ++c) add_panel(e * std::ldexp(1.0L, -c - 1), e * std::ldexp(1.0L, -c), end, c);
          std::vector<LD> edges{e};
          while (edges.back() * 2 < half_arc) edges.push_back(edges.back() * 2);
          edges.push_back(half_arc);
          const int sub = 1 << L;
          for (std::size_t k = 0; k + 1 < edges.size(); ++k)
            for (int j = 0; j < sub; ++j) {
              const LD w = (edges[k + 1] - edges[k]) / sub;
              add_panel(edges[k] + j * w, edges[k] + (j + 1) * w, -1, 0);
            }
        }
      }
    }

    const auto fibers = map_indexed<Fiber>(nodes.size(), cfg.exec, [&](std::size_t i) {
      LD th = std::fmod(nodes[i].theta, kTwoPi);
      if (th < 0) th += kTwoPi;
      return eval_fiber(phi, axis, p, th, cfg.rule, cfg.inner_panels);
    });

    std::vector<LD> far;
    std::vector<std::vector<LD>> cells(n_ends);
    std::vector<int> stop(n_ends);
    for (int e = 0; e < n_ends; ++e) {
      cells[e].assign(cells_per_end[e], 0.0L);
      stop[e] = cells_per_end[e];
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& nd = nodes[i];
      const Fiber& f = fibers[i];
      if (nd.end < 0) {
        if (!std::isfinite(static_cast<double>(f.mean)))
          throw Error(ErrorCode::no_convergence, "fiber integral failed away from the singular fibers");
        far.push_back(nd.weight * f.mean);
        continue;
      }
      if (!std::isfinite(static_cast<double>(f.mean)) || f.min_gap < LD(cfg.eps_floor))
        stop[nd.end] = std::min(stop[nd.end], nd.cell);
      else
        cells[nd.end][nd.cell] += nd.weight * f.mean;
    }
    LD total = pairwise_sum(far);
    std::vector<EndTail> tails;
    bool diverging = false;
    for (int e = 0; e < n_ends; ++e) {
      cells[e].resize(stop[e]);
      tails.push_back(extrapolate(cells[e], cfg.ratio_margin));
      diverging = diverging || tails.back().diverging;
      total += tails.back().sum + (tails.back().diverging ? 0.0L : tails.back().tail);
      res.tail_ratio = std::max(res.tail_ratio, static_cast<double>(tails.back().ratio));
    }
    res.levels.push_back({static_cast<long long>(nodes.size()), static_cast<double>(total / kTwoPi)});
    last_tails = tails;
    if (L == cfg.ladder - 1 && diverging) {
      classify_ladder(res, cfg.rel_tol, cfg.growth_tol);
      res.classification = Verdict::diverging;
      res.value = std::numeric_limits<double>::infinity();
      return res;
    }
  }
  classify_ladder(res, cfg.rel_tol, cfg.growth_tol);
  res.value = res.classification == Verdict::diverging ? std::numeric_limits<double>::infinity()
                                                       : std::pow(res.levels.back().estimate, 1.0 / p);
  return res;
}

H1Check h1_degree_check(const Rif& phi, const QuadConfig& cfg) {
  const auto sing = find_singularities(phi, cfg.scan);
  H1Check h;
  h.value1 = hp_norm_derivative(phi, Axis::z1, 1.0, sing, cfg).value;
  h.value2 = hp_norm_derivative(phi, Axis::z2, 1.0, sing, cfg).value;
  h.m = phi.degree().m;
  h.n = phi.degree().n;
  return h;
}

DirichletTail dirichlet_partial(const SeriesGrid& a, double alpha1, double alpha2, int N, const DirichletConfig& cfg) {
  if (N > a.N) throw Error(ErrorCode::invalid_argument, "series grid does not reach the requested order");
  if (N < 8) throw Error(ErrorCode::invalid_argument, "Dirichlet tail needs N >= 8");
  DirichletTail t;
  t.alpha1 = alpha1;
  t.alpha2 = alpha2;
  std::vector<double> w1(N + 1), w2(N + 1);
  for (int k = 0; k <= N; ++k) w1[k] = std::pow(k + 1.0, alpha1), w2[k] = std::pow(k + 1.0, alpha2);

  // Row sums feed the square partial sums; diagonal sums are the annular T_n.
  const auto terms = map_indexed<std::vector<double>>(static_cast<std::size_t>(N + 1), cfg.exec, [&](std::size_t kk) {
    const int k = static_cast<int>(kk);
    std::vector<double> row(N + 1);
    for (int l = 0; l <= N; ++l) row[l] = w1[k] * w2[l] * std::norm(a.at(k, l));
    return row;
  });
  t.annular.assign(N + 1, 0.0);
  for (int n = 0; n <= N; ++n) {
    std::vector<double> diag;
    for (int k = 0; k <= n; ++k) diag.push_back(terms[k][n - k]);
    t.annular[n] = pairwise_sum(diag);
  }
  for (int M : {N / 4, N / 2, (3 * N) / 4, N}) {
    std::vector<double> rows;
    for (int k = 0; k <= M; ++k) rows.push_back(pairwise_sum(terms[k].data(), static_cast<std::size_t>(M + 1)));
    t.partial_sums.emplace_back(M, pairwise_sum(rows));
  }
  std::vector<double> x, y;
  for (int n = std::max(1, N / 4); n <= N; ++n)
    if (t.annular[n] > 0) x.push_back(std::log(double(n))), y.push_back(std::log(t.annular[n]));
  t.tail_exponent = fit_slope(x, y);
  if (x.size() < 2)
    t.verdict = Membership::member;  // finitely many nonzero terms
  else if (t.tail_exponent < -1.0 - cfg.margin)
    t.verdict = Membership::member;
  else if (t.tail_exponent > -1.0 + cfg.margin)
    t.verdict = Membership::not_member;
  else
    t.verdict = Membership::inconclusive;
  return t;
}

DirichletTail inv_series_dirichlet(const BiPoly& p, double alpha, int N, const DirichletConfig& cfg) {
  return dirichlet_partial(inv_series(p, N, cfg.exec), alpha, alpha, N, cfg);
}

void apply_contact_override(DirichletTail& t, const ContactReport& contact) {
  if (t.verdict != Membership::inconclusive || t.alpha1 != t.alpha2) return;
  const double cutoff = 0.5 * std::min(contact.hp_threshold_1, contact.hp_threshold_2);
  if (t.alpha1 < cutoff - 1e-9) {
    t.verdict = Membership::member;
    t.theorem_override = true;
  } else if (std::abs(t.alpha1 - cutoff) <= 1e-9) {
    t.verdict = Membership::not_member;
    t.theorem_override = true;
  }
}

MembershipReport membership_table(const ContactReport& contact) {
  MembershipReport m;
  m.singular = !contact.singularities.empty();
  m.hp_sup_1 = contact.hp_threshold_1;
  m.hp_sup_2 = contact.hp_threshold_2;
  m.excludes_three_halves = m.singular;
  m.d_p0_sup = m.hp_sup_1;
  m.d_0p_sup = m.hp_sup_2;
  m.aniso_sup_1 = 0.5 * m.hp_sup_1;
  m.aniso_sup_2 = 0.5 * m.hp_sup_2;
  m.d_alpha_sup = std::min(m.aniso_sup_1, m.aniso_sup_2);
  return m;
}

bool hp_member(const MembershipReport& m, Axis axis, double p) {
  return p < (axis == Axis::z1 ? m.hp_sup_1 : m.hp_sup_2);
}

}  // namespace riflab
