#pragma once

// Coherent information of the complementary channel on rho = (I + m X) / 2.

#include <stdexcept>

#include "dephrasure/channel.hpp"

namespace dephrasure {

class UnderflowAtParams : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WitnessResult {
  ChannelParams params;
  double m = 0.0;
  double epsilon = 0.5;  // (1 - m) / 2
  double ci_value = 0.0;
};

/// q h(eps) + (1-q) [h(p) - h(p + eps - 2 eps p)] with eps = (1 - m) / 2.
double comp_ci_x_state(const ChannelParams& params, double m);

/// Same value from the epsilon parametrization; exact for eps far below
/// machine precision.
double comp_ci_epsilon(const ChannelParams& params, double epsilon);

/// I_c(rho, N^c) through the Kraus representation and a purification.
double comp_ci_direct(const ChannelParams& params, double m);

/// 2^{-((1-q)/q)(1-2p) log2((1-p)/p)}; every smaller positive epsilon gives
/// positive complementary coherent information.
double epsilon_bound(const ChannelParams& params);

/// Starts at half the bound and halves up to 64 times until the value is
/// positive. Requires p, q in (0, 1/2]. Throws UnderflowAtParams when epsilon
/// reaches 0 first.
WitnessResult positivity_witness(const ChannelParams& params);

}  // namespace dephrasure
