#pragma once

#include <string>
#include <vector>

#include "riflab/rif.hpp"

namespace riflab {

/// alpha(z) = i(1+z)/(1-z), alpha~(z) = i(1-z)/(1+z), beta = alpha^-1, beta~ = alpha~^-1.
enum class Cayley { alpha, alpha_tilde, beta, beta_tilde };

Complex cayley(Complex x, Cayley map);

/// f = alpha~(c phi(beta(w))) = i(P - c P~)/(P + c P~), where
/// P(w) = (w1+i)^m (w2+i)^n p(beta(w)) and P~ likewise from ptilde.
struct PickFn {
  Rif source;
  Complex phase = 1.0;
  RationalFn f;

  Complex operator()(Complex w1, Complex w2) const { return f(w1, w2); }
  /// The unexpanded definition, kept as an independent route.
  Complex composed(Complex w1, Complex w2) const;
};

/// `phase` is a unimodular constant multiplying phi before the Cayley map; 1
/// gives the plain transform.
PickFn pick_transform(const Rif& phi, Complex phase = 1.0);

/// N1 D2 - D1 N2 vanishes identically, up to rel * scale.
bool same_rational(const RationalFn& a, const RationalFn& b, double rel = 1e-10);

struct TraceConfig {
  double h = 1e-2;
  double h_min = 1e-8;
  /// Steps may grow after easy corrections, up to this length.
  double h_max = 1.0;
  double corrector_tol = 1e-10;
  int corrector_iter = 8;
  double box = 1e3;
  long max_steps = 200000;
  /// The first tangent is oriented to have a nonnegative dot product with this.
  double hint_x = 1.0;
  double hint_y = 1.0;
};

enum class TraceEnd { reached_bound, closed_loop, step_failure };
const char* to_string(TraceEnd e);

struct LevelVertex {
  double x;
  double y;
  double residual;
};

struct LevelCurve {
  double level = 0.0;
  std::vector<LevelVertex> points;
  TraceEnd terminated_reason = TraceEnd::step_failure;
};

/// Follows the real level set {f = level} from (x0, y0) by tangent predictor
/// and gradient Newton corrector.
LevelCurve trace_level_curve(const PickFn& f, double x0, double y0, double level, const TraceConfig& cfg = {});

}  // namespace riflab
