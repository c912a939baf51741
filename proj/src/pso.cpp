#include "dephrasure/pso.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dephrasure {

namespace {

std::pair<double, double> bound_for(const PsoConfig& config, int d) {
  return config.bounds.size() == 1 ? config.bounds.front()
                                   : config.bounds[static_cast<std::size_t>(d)];
}

}  // namespace

void validate(const PsoConfig& config, int dim) {
  if (dim < 1) throw std::invalid_argument("pso: dim must be >= 1");
  if (config.n_particles < 2) throw std::invalid_argument("pso: need at least 2 particles");
  if (config.c_inertia < 0.0 || config.c_self < 0.0 || config.c_social < 0.0) {
    throw std::invalid_argument("pso: coefficients must be nonnegative");
  }
  if (config.max_iterations < 0) throw std::invalid_argument("pso: negative iteration budget");
  if (config.bounds.size() != 1 && config.bounds.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("pso: bounds must have 1 or dim entries");
  }
  for (const auto& [lo, hi] : config.bounds) {
    if (!(lo < hi)) throw std::invalid_argument("pso: degenerate bounds");
  }
  for (const auto& x : config.initial_positions) {
    if (x.size() != static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("pso: warm start has wrong dimension");
    }
  }
  if (config.initial_positions.size() > static_cast<std::size_t>(config.n_particles)) {
    throw std::invalid_argument("pso: more warm starts than particles");
  }
}

void pso_velocity_update(std::span<double> velocity, std::span<const double> position,
                         std::span<const double> personal_best, std::span<const double> global_best,
                         std::span<const double> u_self, std::span<const double> u_soc,
                         const PsoConfig& config) {
  const double sign = config.literal_signs ? -1.0 : 1.0;
  for (std::size_t d = 0; d < velocity.size(); ++d) {
    const double us = u_self.size() == 1 ? u_self[0] : u_self[d];
    const double ug = u_soc.size() == 1 ? u_soc[0] : u_soc[d];
    velocity[d] = config.c_inertia * velocity[d] +
                  config.c_self * us * sign * (personal_best[d] - position[d]) +
                  config.c_social * ug * sign * (global_best[d] - position[d]);
  }
}

PsoResult pso_minimize(const Objective& objective, int dim, const PsoConfig& config) {
  validate(config, dim);
  const auto n = static_cast<std::size_t>(config.n_particles);
  const auto D = static_cast<std::size_t>(dim);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<double>> x(n, std::vector<double>(D));
  std::vector<std::vector<double>> v(n, std::vector<double>(D));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < D; ++d) {
      const auto [lo, hi] = bound_for(config, static_cast<int>(d));
      const double width = hi - lo;
      x[i][d] = lo + width * unit(rng);
      v[i][d] = width * (2.0 * unit(rng) - 1.0);
    }
    if (i < config.initial_positions.size()) x[i] = config.initial_positions[i];
  }

  PsoResult result;
  std::vector<std::vector<double>> best_x = x;
  std::vector<double> best_f(n);
  std::size_t g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    best_f[i] = objective(x[i]);
    ++result.evaluations;
    if (best_f[i] < best_f[g]) g = i;
  }
  result.best_position = best_x[g];
  result.best_value = best_f[g];
  result.history.push_back(result.best_value);

  const std::size_t draws = config.per_dimension_draws ? D : 1;
  std::vector<double> u_self(draws), u_soc(draws);
  for (int it = 0; it < config.max_iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& u : u_self) u = unit(rng);
      for (auto& u : u_soc) u = unit(rng);
      pso_velocity_update(v[i], x[i], best_x[i], result.best_position, u_self, u_soc, config);
      for (std::size_t d = 0; d < D; ++d) {
        const auto [lo, hi] = bound_for(config, static_cast<int>(d));
        x[i][d] = std::clamp(x[i][d] + v[i][d], lo, hi);
      }
    }
    // Global best is folded in particle order after the whole swarm moved.
    for (std::size_t i = 0; i < n; ++i) {
      const double f = objective(x[i]);
      ++result.evaluations;
      if (f < best_f[i]) {
        best_f[i] = f;
        best_x[i] = x[i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (best_f[i] < result.best_value) {
        result.best_value = best_f[i];
        result.best_position = best_x[i];
      }
    }
    result.history.push_back(result.best_value);
    result.iterations_run = it + 1;

    const auto h = result.history.size();
    if (config.stall_window > 0 && h > static_cast<std::size_t>(config.stall_window)) {
      const double before = result.history[h - 1 - static_cast<std::size_t>(config.stall_window)];
      if (before - result.best_value < config.stall_tolerance) break;
    }
  }
  return result;
}

}  // namespace dephrasure
