#include "dephrasure/private_info.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dephrasure/maximize.hpp"

namespace dephrasure {

namespace {

constexpr double kProbabilityTol = 1e-12;
// Entropy round-off floor; values below it are not counted as positive.
constexpr double kPositiveFloor = 1e-12;
constexpr int kRefDim = 2;
constexpr int kSystemDim = 2;

double holevo(const Ensemble& ensemble, const KrausSet& channel) {
  Matrix mean = Matrix::Zero(channel.out_dim(), channel.out_dim());
  double conditional = 0.0;
  for (const auto& [prob, rho] : ensemble.members()) {
    if (prob == 0.0) continue;
    const Matrix out = apply_kraus(channel, rho.matrix());
    mean += prob * out;
    conditional += prob * von_neumann_entropy(out);
  }
  return von_neumann_entropy(mean) - conditional;
}

// Ensemble on A from a pure state on S (x) R (x) A, S leading.
Ensemble ensemble_from_state(const Vector& psi, int s_dim) {
  const int block = kRefDim * kSystemDim;
  std::vector<std::pair<double, DensityMatrix>> members;
  std::vector<double> probs(static_cast<std::size_t>(s_dim));
  double total = 0.0;
  for (int x = 0; x < s_dim; ++x) {
    probs[static_cast<std::size_t>(x)] = psi.segment(x * block, block).squaredNorm();
    total += probs[static_cast<std::size_t>(x)];
  }
  for (int x = 0; x < s_dim; ++x) {
    const Vector phi = psi.segment(x * block, block);
    const double px = probs[static_cast<std::size_t>(x)];
    if (px <= 0.0) {
      members.emplace_back(0.0, DensityMatrix::maximally_mixed(kSystemDim));
      continue;
    }
    Matrix rho = Matrix::Zero(kSystemDim, kSystemDim);
    for (int r = 0; r < kRefDim; ++r) {
      const Vector a = phi.segment(r * kSystemDim, kSystemDim);
      rho += a * a.adjoint();
    }
    rho /= px;
    rho = 0.5 * (rho + rho.adjoint());
    members.emplace_back(px / total, DensityMatrix(rho));
  }
  return Ensemble(std::move(members));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vector gaussian_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

}  // namespace

Ensemble::Ensemble(std::vector<std::pair<double, DensityMatrix>> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("Ensemble: no members");
  double total = 0.0;
  for (const auto& [prob, rho] : members_) {
    if (!(prob >= 0.0)) throw std::invalid_argument("Ensemble: negative probability");
    if (rho.dim() != members_.front().second.dim()) throw DimensionError("Ensemble: mixed dimensions");
    total += prob;
  }
  if (std::abs(total - 1.0) > kProbabilityTol) throw std::invalid_argument("Ensemble: probabilities do not sum to 1");
}

DensityMatrix Ensemble::average() const {
  Matrix mean = Matrix::Zero(dim(), dim());
  for (const auto& [prob, rho] : members_) mean += prob * rho.matrix();
  return DensityMatrix(mean);
}

double ensemble_private_info(const Ensemble& ensemble, const ChannelParams& params) {
  validate(params);
  if (ensemble.dim() != 2) throw DimensionError("ensemble_private_info: qubit ensemble required");
  return holevo(ensemble, dephrasure_kraus(params)) - holevo(ensemble, complementary_kraus(params));
}

Ensemble plusminus_ensemble(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("plusminus_ensemble: lambda outside [0,1]");
  const double m = 2.0 * lambda - 1.0;
  return Ensemble({{0.5, DensityMatrix::bloch(m, 0.0, 0.0)}, {0.5, DensityMatrix::bloch(-m, 0.0, 0.0)}});
}

PrivateBound private_lower_bound(const ChannelParams& params) {
  validate(params);
  const auto f = [&](double lambda) { return ensemble_private_info(plusminus_ensemble(lambda), params); };
  const Maximum1D best = grid_golden_maximize(f, 0.5, 1.0, 1e-3, 1e-10);
  return {best.value, best.argument};
}

double private_zero_on_diagonal(double slope, double lo, double hi, double tol) {
  const auto positive = [slope](double p) { return private_lower_bound({p, slope * p}).value > kPositiveFloor; };
  if (!positive(lo)) throw std::domain_error("private_zero_on_diagonal: bound not positive at lo");
  if (positive(hi)) throw std::domain_error("private_zero_on_diagonal: bound still positive at hi");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

EnsembleSearchResult random_ensemble_search(const ChannelParams& params, std::uint64_t seed, int trials,
                                            int ensemble_size, int refine_steps) {
  validate(params);
  if (trials < 1) throw std::invalid_argument("random_ensemble_search: no candidates");
  if (ensemble_size < 1) throw std::invalid_argument("random_ensemble_search: ensemble_size < 1");
  const int dim = ensemble_size * kRefDim * kSystemDim;

  Vector best_state;
  double best_value = -std::numeric_limits<double>::infinity();
  int best_trial = 0;
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(t))));
    const Vector psi = gaussian_state(rng, dim);
    const double value = ensemble_private_info(ensemble_from_state(psi, ensemble_size), params);
    if (value > best_value) {
      best_value = value;
      best_state = psi;
      best_trial = t;
    }
  }

  std::mt19937_64 rng(splitmix64(seed ^ 0x5bd1e995ULL));
  std::uniform_int_distribution<int> coordinate(0, 2 * dim - 1);
  std::normal_distribution<double> normal(0.0, 1.0);
  double step = 0.1;
  for (int accepted = 0, tries = 0; accepted < refine_steps && tries < 20 * refine_steps; ++tries) {
    Vector candidate = best_state;
    const int c = coordinate(rng);
    const Complex delta = (c % 2 == 0) ? Complex(step * normal(rng), 0.0) : Complex(0.0, step * normal(rng));
    candidate(c / 2) += delta;
    candidate /= candidate.norm();
    const double value = ensemble_private_info(ensemble_from_state(candidate, ensemble_size), params);
    if (value > best_value) {
      best_value = value;
      best_state = std::move(candidate);
      ++accepted;
    } else if (tries % 50 == 49) {
      step *= 0.5;
    }
  }
  return {best_value, ensemble_from_state(best_state, ensemble_size), best_trial};
}

}  // namespace dephrasure
