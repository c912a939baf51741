#pragma once

// Coherent information of n uses of the dephrasure channel.
//
// A code is a pure state on reference (x) (qubit)^n. Its n-use output splits
// into orthogonal blocks, one per erasure pattern, so both entropies in
//   I_c = S(N^{(x)n}(rho)) - S((id (x) N^{(x)n})(psi))
// reduce to 2^n small eigenproblems. The Shannon entropy of the pattern
// weights appears in both terms and cancels.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dephrasure/channel.hpp"

namespace dephrasure {

inline constexpr int kDefaultMaxUses = 6;
inline constexpr int kBruteForceMaxUses = 3;

/// Pure state on reference (x) (qubit)^n, reference as the leading factor.
/// Input qubit j (0-based, left to right) is bit (n-1-j) of the input index.
class CodeState {
 public:
  /// Requires unit norm within 1e-12.
  CodeState(int n_uses, int ref_dim, Vector amplitudes);
  /// Rescales nonzero amplitudes to unit norm.
  static CodeState normalized(int n_uses, int ref_dim, Vector amplitudes);

  int n_uses() const { return n_uses_; }
  int ref_dim() const { return ref_dim_; }
  int input_dim() const { return 1 << n_uses_; }
  const Vector& amplitudes() const { return amplitudes_; }

  Complex amplitude(int ref, int input) const { return amplitudes_(ref * input_dim() + input); }
  /// Reduced state on the n channel inputs.
  Matrix input_state() const;

 private:
  int n_uses_;
  int ref_dim_;
  Vector amplitudes_;
};

struct ErasurePatternBlock {
  std::string pattern;  // '1' marks an erased position
  double weight = 0.0;  // q^{|s|} (1-q)^{n-|s|}
  int ref_dim = 1;
  /// State on reference (x) surviving qubits after dephasing the survivors.
  Matrix block;
};

struct RepetitionParams {
  int n = 1;
  double lambda = 0.5;
};

/// sqrt(1 - 4 lambda (1-lambda) (1 - (1-2p)^{2n})).
double u_value(double lambda, double p, int n);

/// Closed-form coherent information of the weighted repetition code.
double repetition_ci(const ChannelParams& params, const RepetitionParams& rep);

struct WeightOptimum {
  double value = 0.0;
  double lambda_star = 0.5;  // in [0, 1/2]
};

WeightOptimum repetition_ci_opt(const ChannelParams& params, int n);

/// sqrt(lambda)|0>_R|0...0> + sqrt(1-lambda)|1>_R|1...1> with a qubit reference.
CodeState repetition_code(const RepetitionParams& rep);

/// Tensor product code: references and inputs are each concatenated.
CodeState product_code(const CodeState& a, const CodeState& b);

std::vector<ErasurePatternBlock> pattern_decompose(const CodeState& code, const ChannelParams& params,
                                                   int n);

/// Throws std::invalid_argument when n exceeds `max_uses`.
double multiletter_ci(const CodeState& code, const ChannelParams& params, int n,
                      int max_uses = kDefaultMaxUses);

/// Independent route through the explicit 2^n -> 3^n Kraus set; n <= 3.
double brute_force_ci(const CodeState& code, const ChannelParams& params, int n);

/// sum_s schmidt[s] |s>_R |s>, normalized; schmidt has length 2^n.
CodeState zdiag_code(std::span<const double> schmidt);

struct ZdiagOptimum {
  double value = 0.0;
  std::vector<double> schmidt;  // indexed by pattern in lexicographic order
};

ZdiagOptimum optimize_zdiag(const ChannelParams& params, int n, std::uint64_t seed,
                            int random_starts = 32);

/// |0000>|psi1> + |1111>|psi1> + |0101>|psi2> + |1010> X|psi2>, normalized,
/// with psi_i = c_i|0> + d_i|1>. The two leading qubits are the reference,
/// the three trailing ones enter the channel.
CodeState chi3_code(Complex c1, Complex d1, Complex c2, Complex d2);

struct Chi3Optimum {
  double value = 0.0;
  std::array<Complex, 4> coefficients{};  // c1, d1, c2, d2 (normalized code)
};

/// f(p, lambda, n) = h((1+u)/2) / h(lambda); the weighted repetition code has
/// positive coherent information iff 1 - (q/(1-q))^n exceeds it.
double threshold_f(double p, double lambda, int n);

}  // namespace dephrasure
