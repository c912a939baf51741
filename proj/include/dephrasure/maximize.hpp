#pragma once

// One-dimensional maximizers shared by the weight and Bloch-parameter searches.

#include <functional>

namespace dephrasure {

struct Maximum1D {
  double argument = 0.0;
  double value = 0.0;
};

using ScalarFunction = std::function<double(double)>;

/// Golden-section search for a maximum on [a, b] down to width `tol`.
Maximum1D golden_section_maximize(const ScalarFunction& f, double a, double b, double tol);

/// Dense grid over [lo, hi] (endpoints included) followed by golden-section
/// refinement on the interval bracketing the best grid point.
Maximum1D grid_golden_maximize(const ScalarFunction& f, double lo, double hi, double step,
                               double tol);

/// Maximizes f(lambda) over lambda in [0, 1/2]. A linear grid of width `step`
/// is combined with a log2-spaced grid reaching down to 2^-1000, since maxima
/// near a zero threshold sit at exponentially small weights.
Maximum1D maximize_weight(const ScalarFunction& f, double step, double tol);

}  // namespace dephrasure
