#pragma once

// Seeded particle swarm minimizer.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dephrasure/quantum_core.hpp"

namespace dephrasure {

struct PsoConfig {
  int n_particles = 64;
  double c_inertia = 0.729;
  double c_self = 1.49445;
  double c_social = 1.49445;
  int max_iterations = 500;
  /// Per-dimension [lo, hi]; a single entry is broadcast to every dimension.
  std::vector<std::pair<double, double>> bounds{{-1.0, 1.0}};
  std::uint64_t seed = 0;
  double stall_tolerance = 1e-9;
  int stall_window = 50;
  /// Draw u_self / u_soc per coordinate instead of one scalar per particle.
  bool per_dimension_draws = false;
  /// Use the repulsive signs (x - p), (x - g) exactly as printed in the
  /// original update rule instead of the attractive (p - x), (g - x).
  bool literal_signs = false;
  /// Positions injected as the first particles (warm starts).
  std::vector<std::vector<double>> initial_positions;
};

struct PsoResult {
  std::vector<double> best_position;
  double best_value = 0.0;
  int iterations_run = 0;
  long evaluations = 0;
  /// Incumbent value after initialization and after every iteration.
  std::vector<double> history;
};

using Objective = std::function<double(std::span<const double>)>;

/// Throws std::invalid_argument for an unusable configuration.
void validate(const PsoConfig& config, int dim);

/// v <- c_I v + c_self u_self (p - x) + c_soc u_soc (g - x), or with the
/// printed signs when config.literal_signs is set. `u_self` / `u_soc` hold one
/// value, or one per coordinate.
void pso_velocity_update(std::span<double> velocity, std::span<const double> position,
                         std::span<const double> personal_best, std::span<const double> global_best,
                         std::span<const double> u_self, std::span<const double> u_soc,
                         const PsoConfig& config);

PsoResult pso_minimize(const Objective& objective, int dim, const PsoConfig& config);

}  // namespace dephrasure
