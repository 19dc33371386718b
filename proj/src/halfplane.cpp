#include "riflab/halfplane.hpp"

#include <cmath>

namespace riflab {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex checked_div(Complex num, Complex den) {
  if (std::abs(den) < 1e-300) throw Error(ErrorCode::pole_input, "input at the pole of the Cayley map");
  return num / den;
}

BiPoly power(const BiPoly& b, int k) {
  BiPoly r = BiPoly::constant(1.0);
  for (int j = 0; j < k; ++j) r = r * b;
  return r;
}

// (w1+i)^m (w2+i)^n q(beta(w)) for q of declared bidegree (m, n).
BiPoly clear_cayley(const BiPoly& q, Bidegree d) {
  const BiPoly a1(Grid{{-kI}, {1.0}}), b1(Grid{{kI}, {1.0}});
  const BiPoly a2(Grid{{-kI, 1.0}}), b2(Grid{{kI, 1.0}});
  std::vector<BiPoly> f1, f2;
  for (int k = 0; k <= d.m; ++k) f1.push_back(power(a1, k) * power(b1, d.m - k));
  for (int l = 0; l <= d.n; ++l) f2.push_back(power(a2, l) * power(b2, d.n - l));
  BiPoly out(d);
  for (int k = 0; k <= d.m; ++k)
    for (int l = 0; l <= d.n; ++l)
      if (q.coeff(k, l) != 0.0) out = out + q.coeff(k, l) * (f1[k] * f2[l]);
  return out;
}

}  // namespace

Complex cayley(Complex x, Cayley map) {
  switch (map) {
    case Cayley::alpha:
      return kI * checked_div(1.0 + x, 1.0 - x);
    case Cayley::alpha_tilde:
      return kI * checked_div(1.0 - x, 1.0 + x);
    case Cayley::beta:
      return checked_div(x - kI, x + kI);
    case Cayley::beta_tilde:
      return checked_div(1.0 + kI * x, 1.0 - kI * x);
  }
  throw Error(ErrorCode::invalid_argument, "unknown Cayley map");
}

Complex PickFn::composed(Complex w1, Complex w2) const {
  const Complex z1 = cayley(w1, Cayley::beta), z2 = cayley(w2, Cayley::beta);
  return cayley(phase * source.eval<double>(z1, z2), Cayley::alpha_tilde);
}

PickFn pick_transform(const Rif& phi, Complex phase) {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) throw Error(ErrorCode::invalid_argument, "phase must be unimodular");
  const BiPoly P = clear_cayley(phi.p(), phi.degree());
  const BiPoly Pt = clear_cayley(phi.ptilde(), phi.degree());
  BiPoly num = kI * (P - phase * Pt), den = P + phase * Pt;
  num.tighten(1e-13);
  den.tighten(1e-13);
  // Scale so the largest denominator coefficient is real and positive.
  Complex lead = 0.0;
  for (int k = 0; k <= den.m(); ++k)
    for (int l = 0; l <= den.n(); ++l)
      if (std::abs(den.coeff(k, l)) > std::abs(lead) * (1.0 + 1e-12)) lead = den.coeff(k, l);
  if (lead == 0.0) throw Error(ErrorCode::zero_polynomial, "Pick denominator vanishes identically");
  const Complex s = 1.0 / lead;
  num *= s;
  den *= s;
  return PickFn{phi, phase, RationalFn{num.tighten(1e-13), den.tighten(1e-13)}};
}

bool same_rational(const RationalFn& a, const RationalFn& b, double rel) {
  const BiPoly d = a.num * b.den - a.den * b.num;
  const double scale = std::max((a.num * b.den).max_abs(), (a.den * b.num).max_abs());
  return d.max_abs() <= rel * std::max(scale, 1e-300);
}

const char* to_string(TraceEnd e) {
  switch (e) {
    case TraceEnd::reached_bound:
      return "reached_bound";
    case TraceEnd::closed_loop:
      return "closed_loop";
    case TraceEnd::step_failure:
      return "step_failure";
  }
  return "?";
}

namespace {

struct LevelSystem {
  const RationalFn& f;
  RationalFn fx, fy;
  double level;

  double value(double x, double y) const { return f(x, y).real() - level; }
  std::pair<double, double> grad(double x, double y) const { return {fx(x, y).real(), fy(x, y).real()}; }

  // Newton along the gradient; false if it does not reach tol within iter steps.
  bool correct(double& x, double& y, double tol, int iter, int* used = nullptr) const {
    for (int k = 0; k <= iter; ++k) {
      const double r = value(x, y);
      if (!std::isfinite(r)) return false;
      if (std::abs(r) < tol) {
        if (used) *used = k;
        return true;
      }
      if (k == iter) break;
      const auto [gx, gy] = grad(x, y);
      const double g2 = gx * gx + gy * gy;
      if (!(g2 > 1e-24)) return false;
      x -= r * gx / g2;
      y -= r * gy / g2;
    }
    return false;
  }
};

}  // namespace

LevelCurve trace_level_curve(const PickFn& pf, double x0, double y0, double level, const TraceConfig& cfg) {
  const LevelSystem sys{pf.f, derivative(pf.f, Axis::z1), derivative(pf.f, Axis::z2), level};
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(level))
    throw Error(ErrorCode::invalid_argument, "start point and level must be finite");
  LevelCurve out;
  out.level = level;

  double x = x0, y = y0;
  {
    const auto [gx, gy] = sys.grad(x, y);
    if (!(std::hypot(gx, gy) > 1e-12)) throw Error(ErrorCode::flat_gradient, "gradient vanishes at the start point");
  }
  if (!sys.correct(x, y, cfg.corrector_tol, 50))
    throw Error(ErrorCode::start_off_level, "start point could not be corrected onto the level set");
  auto push = [&](double px, double py) { out.points.push_back({px, py, std::abs(sys.value(px, py))}); };
  push(x, y);

  auto tangent = [&](double px, double py, double& tx, double& ty) {
    const auto [gx, gy] = sys.grad(px, py);
    const double g = std::hypot(gx, gy);
    if (!(g > 1e-12)) return false;
    tx = -gy / g;
    ty = gx / g;
    return true;
  };
  double tx, ty;
  if (!tangent(x, y, tx, ty)) throw Error(ErrorCode::flat_gradient, "gradient vanishes at the start point");
  if (tx * cfg.hint_x + ty * cfg.hint_y < 0) tx = -tx, ty = -ty;

  const double sx = x, sy = y;
  double h = cfg.h;
  for (long step = 0; step < cfg.max_steps; ++step) {
    if (std::abs(x) > cfg.box || std::abs(y) > cfg.box) {
      out.terminated_reason = TraceEnd::reached_bound;
      return out;
    }
    bool ok = false;
    while (h >= cfg.h_min) {
      double nx = x + h * tx, ny = y + h * ty;
      int used = 0;
      double ntx, nty;
      if (sys.correct(nx, ny, cfg.corrector_tol, cfg.corrector_iter, &used) && tangent(nx, ny, ntx, nty)) {
        if (ntx * tx + nty * ty < 0) ntx = -ntx, nty = -nty;
        const double moved = std::hypot(nx - x, ny - y);
        // Reject steps that turn sharply or jump to another branch.
        if (ntx * tx + nty * ty > 0.98 && moved < 2.0 * h) {
          x = nx, y = ny, tx = ntx, ty = nty;
          ok = true;
          if (used <= 2) h = std::min(cfg.h_max, 1.5 * h);
          break;
        }
      }
      h *= 0.5;
    }
    if (!ok) {
      out.terminated_reason = TraceEnd::step_failure;
      return out;
    }
    push(x, y);
    if (out.points.size() > 10 && std::hypot(x - sx, y - sy) < h) {
      out.terminated_reason = TraceEnd::closed_loop;
      return out;
    }
  }
  out.terminated_reason = TraceEnd::step_failure;
  return out;
}

}  // namespace riflab
