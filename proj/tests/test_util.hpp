#pragma once

#include <random>

#include "dephrasure/quantum_core.hpp"

namespace testutil {

inline double max_abs(const dephrasure::Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

inline dephrasure::Vector random_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  dephrasure::Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = dephrasure::Complex(re, im);
  }
  return v / v.norm();
}

/// Random state of the given rank from a Ginibre matrix.
inline dephrasure::DensityMatrix random_density(std::mt19937_64& rng, int dim, int rank) {
  dephrasure::Matrix g(dim, rank);
  for (int c = 0; c < rank; ++c) g.col(c) = random_vector(rng, dim);
  dephrasure::Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return dephrasure::DensityMatrix(rho);
}

/// Point uniform in the Bloch ball.
inline dephrasure::DensityMatrix random_qubit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    const double x = unit(rng);
    const double y = unit(rng);
    const double z = unit(rng);
    if (x * x + y * y + z * z <= 1.0) return dephrasure::DensityMatrix::bloch(x, y, z);
  }
}

}  // namespace testutil
