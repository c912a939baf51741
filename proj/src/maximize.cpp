#include "dephrasure/maximize.hpp"

#include <algorithm>
#include <cmath>

namespace dephrasure {

namespace {

constexpr double kLogGridFloor = -1000.0;
constexpr double kLogGridStep = 0.5;
constexpr double kLogTol = 1e-9;

}  // namespace

Maximum1D golden_section_maximize(const ScalarFunction& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? Maximum1D{c, fc} : Maximum1D{d, fd};
}

Maximum1D grid_golden_maximize(const ScalarFunction& f, double lo, double hi, double step,
                               double tol) {
  const int steps = std::max(1, static_cast<int>(std::ceil((hi - lo) / step - 1e-9)));
  Maximum1D best{lo, f(lo)};
  int best_i = 0;
  for (int i = 1; i <= steps; ++i) {
    const double x = (i == steps) ? hi : lo + (hi - lo) * i / steps;
    const double v = f(x);
    if (v > best.value) {
      best = {x, v};
      best_i = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(0, best_i - 1) / steps;
  const double b = lo + (hi - lo) * std::min(steps, best_i + 1) / steps;
  const Maximum1D refined = golden_section_maximize(f, a, b, tol);
  return refined.value > best.value ? refined : best;
}

Maximum1D maximize_weight(const ScalarFunction& f, double step, double tol) {
  Maximum1D best = grid_golden_maximize(f, 0.0, 0.5, step, tol);

  // Same search in t = log2(lambda) for lambda below the linear grid spacing.
  const double t_hi = std::log2(step);
  const auto g = [&f](double t) { return f(std::exp2(t)); };
  const Maximum1D log_best = grid_golden_maximize(g, kLogGridFloor, t_hi, kLogGridStep, kLogTol);
  if (log_best.value > best.value) best = {std::exp2(log_best.argument), log_best.value};
  return best;
}

}  // namespace dephrasure
