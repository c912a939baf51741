#pragma once

// Ensemble private information I(X;B) - I(X;E) of the dephrasure channel.

#include <cstdint>
#include <utility>
#include <vector>

#include "dephrasure/channel.hpp"

namespace dephrasure {

/// Probabilities are nonnegative and sum to 1 within 1e-12; all members share
/// one dimension.
class Ensemble {
 public:
  explicit Ensemble(std::vector<std::pair<double, DensityMatrix>> members);

  const std::vector<std::pair<double, DensityMatrix>>& members() const { return members_; }
  int dim() const { return members_.front().second.dim(); }
  std::size_t size() const { return members_.size(); }
  DensityMatrix average() const;

 private:
  std::vector<std::pair<double, DensityMatrix>> members_;
};

/// Holevo-form difference for a qubit ensemble.
double ensemble_private_info(const Ensemble& ensemble, const ChannelParams& params);

/// {1/2: lambda|+><+| + (1-lambda)|-><-|, 1/2: (1-lambda)|+><+| + lambda|-><-|}.
Ensemble plusminus_ensemble(double lambda);

struct PrivateBound {
  double value = 0.0;
  double lambda_star = 1.0;  // in [1/2, 1]
};

/// Maximum of the +/- ensemble private information over lambda.
PrivateBound private_lower_bound(const ChannelParams& params);

/// Largest p on q = slope * p (bracketed in [lo, hi]) where private_lower_bound
/// exceeds 1e-12, by bisection to `tol`.
double private_zero_on_diagonal(double slope, double lo, double hi, double tol = 1e-9);

struct EnsembleSearchResult {
  double value = 0.0;
  Ensemble ensemble;
  int best_trial = 0;
};

/// Random pure states on S (x) R (x) A with |A| = 2 and |S| = ensemble_size;
/// measuring S gives the ensemble on A. The best trial is refined by at most
/// `refine_steps` accepted coordinate perturbations. Throws
/// std::invalid_argument when trials < 1.
EnsembleSearchResult random_ensemble_search(const ChannelParams& params, std::uint64_t seed, int trials,
                                            int ensemble_size = 4, int refine_steps = 200);

}  // namespace dephrasure
