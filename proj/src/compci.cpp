#include "dephrasure/compci.hpp"

#include <cmath>
#include <string>

namespace dephrasure {

namespace {

constexpr int kMaxHalvings = 64;

// h(p + d) - h(p) without cancellation for small d.
double entropy_increment(double p, double d) {
  if (d == 0.0) return 0.0;
  const double ln2 = std::log(2.0);
  double out = -p * std::log1p(d / p) - (1.0 - p) * std::log1p(-d / (1.0 - p));
  out += d * (std::log(1.0 - p - d) - std::log(p + d));
  return out / ln2;
}

}  // namespace

double comp_ci_epsilon(const ChannelParams& params, double epsilon) {
  validate(params);
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) throw std::domain_error("comp_ci_epsilon: epsilon outside [0,1/2]");
  const double p = params.p;
  const double q = params.q;
  const double d = epsilon * (1.0 - 2.0 * p);
  double change;
  if (p == 0.0 || p == 1.0) {
    change = binary_entropy(p + d) - binary_entropy(p);
  } else {
    change = entropy_increment(p, d);
  }
  return q * binary_entropy(epsilon) - (1.0 - q) * change;
}

double comp_ci_x_state(const ChannelParams& params, double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("comp_ci_x_state: m outside [0,1]");
  return comp_ci_epsilon(params, (1.0 - m) / 2.0);
}

double comp_ci_direct(const ChannelParams& params, double m) {
  if (!(m >= 0.0 && m <= 1.0)) throw std::domain_error("comp_ci_direct: m outside [0,1]");
  return coherent_information(complementary_kraus(params), DensityMatrix::bloch(m, 0.0, 0.0));
}

double epsilon_bound(const ChannelParams& params) {
  validate(params, true);
  const double p = params.p;
  const double q = params.q;
  if (p <= 0.0 || q <= 0.0) throw std::domain_error("epsilon_bound: requires p, q > 0");
  return std::exp2(-((1.0 - q) / q) * (1.0 - 2.0 * p) * std::log2((1.0 - p) / p));
}

WitnessResult positivity_witness(const ChannelParams& params) {
  WitnessResult result;
  result.params = params;
  double epsilon = 0.5 * epsilon_bound(params);
  for (int i = 0; i <= kMaxHalvings && epsilon > 0.0; ++i, epsilon *= 0.5) {
    const double value = comp_ci_epsilon(params, epsilon);
    if (value > 0.0) {
      result.epsilon = epsilon;
      result.m = 1.0 - 2.0 * epsilon;
      result.ci_value = value;
      return result;
    }
  }
  throw UnderflowAtParams("positivity_witness: no positive value at p=" + std::to_string(params.p) +
                          " q=" + std::to_string(params.q));
}

}  // namespace dephrasure
