#include "riflab/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>

namespace riflab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverging: return "diverging";
    case Verdict::unresolved: return "unresolved";
  }
  return "unknown";
}

const GaussRule& gauss12() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<long double, GaussRule::size>;
    GaussRule r{};
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    // Boost stores the nonnegative half.
    int i = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == 0.0L) continue;
      r.x[i] = -a[k], r.w[i] = w[k], ++i;
      r.x[i] = a[k], r.w[i] = w[k], ++i;
    }
    return r;
  }();
  return rule;
}

double fit_growth_exponent(const std::vector<QuadLevel>& levels) {
  std::vector<double> x, y;
  for (const auto& l : levels)
    if (l.n > 0 && l.estimate > 0 && std::isfinite(l.estimate)) {
      x.push_back(std::log(double(l.n)));
      y.push_back(std::log(l.estimate));
    }
  return fit_slope(x, y);
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2 || x.size() != y.size()) return 0.0;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= double(x.size()), my /= double(x.size());
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxx += (x[i] - mx) * (x[i] - mx), sxy += (x[i] - mx) * (y[i] - my);
  return sxx > 0 ? sxy / sxx : 0.0;
}

void classify_ladder(QuadratureResult& r, double rel_tol, double growth_tol) {
  r.growth_exponent = fit_growth_exponent(r.levels);
  if (r.levels.size() >= 2) {
    const double a = r.levels[r.levels.size() - 2].estimate, b = r.levels.back().estimate;
    r.tolerance_achieved = std::abs(b - a) / std::max(std::abs(b), std::numeric_limits<double>::min());
  } else {
    r.tolerance_achieved = std::numeric_limits<double>::infinity();
  }
  if (r.growth_exponent > growth_tol)
    r.classification = Verdict::diverging;
  else if (r.tolerance_achieved <= rel_tol)
    r.classification = Verdict::converged;
  else
    r.classification = Verdict::unresolved;
}

}  // namespace riflab
