#include "dephrasure/multiletter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "dephrasure/maximize.hpp"

namespace dephrasure {

namespace {

constexpr double kLambdaStep = 1e-4;
constexpr double kLambdaTol = 1e-12;

void require_uses(int n, int max_uses, const char* what) {
  if (n < 1 || n > max_uses) {
    throw std::invalid_argument(std::string(what) + ": number of channel uses out of range");
  }
}

// 1 - (1-2p)^{2n} without cancellation at small p.
double contrast_deficit(double p, int n) {
  return -std::expm1(2.0 * n * std::log1p(-2.0 * p));
}

// Smaller eigenvalue (1-u)/2 of the dephased repetition-code purification.
double repetition_small_eigenvalue(double lambda, double p, int n) {
  const double one_minus_u2 = 4.0 * lambda * (1.0 - lambda) * contrast_deficit(p, n);
  const double u = std::sqrt(std::max(0.0, 1.0 - one_minus_u2));
  return 0.5 * one_minus_u2 / (1.0 + u);
}

// Columns of V span the pattern block: block = V V^dagger. Column (e, z)
// holds sqrt(p^{|z|}(1-p)^{m-|z|}) Z^z <e|_erased psi, where e runs over the
// erased qubits' basis states and z over dephasing error patterns on the m
// survivors. Rows are indexed by (reference, survivor state).
Matrix pattern_factor(const CodeState& code, double p, unsigned mask) {
  const int n = code.n_uses();
  const int erased = std::popcount(mask);
  const int m = n - erased;
  const int ref = code.ref_dim();
  const int surv_dim = 1 << m;
  const int erased_dim = 1 << erased;

  // Bit positions (in the input index) of survivors and erased qubits, both
  // in left-to-right order.
  std::vector<int> surv_bits, erased_bits;
  for (int j = 0; j < n; ++j) {
    const int bit = n - 1 - j;
    ((mask >> bit) & 1u ? erased_bits : surv_bits).push_back(bit);
  }
  auto scatter = [](int value, const std::vector<int>& bits) {
    int out = 0;
    const int k = static_cast<int>(bits.size());
    for (int i = 0; i < k; ++i) {
      if ((value >> (k - 1 - i)) & 1) out |= 1 << bits[static_cast<std::size_t>(i)];
    }
    return out;
  };

  std::vector<double> z_weight(static_cast<std::size_t>(surv_dim));
  for (int z = 0; z < surv_dim; ++z) {
    const int k = std::popcount(static_cast<unsigned>(z));
    z_weight[static_cast<std::size_t>(z)] = std::sqrt(std::pow(p, k) * std::pow(1.0 - p, m - k));
  }

  Matrix v = Matrix::Zero(ref * surv_dim, erased_dim * surv_dim);
  for (int e = 0; e < erased_dim; ++e) {
    const int e_bits = scatter(e, erased_bits);
    for (int a = 0; a < surv_dim; ++a) {
      const int input = e_bits | scatter(a, surv_bits);
      for (int r = 0; r < ref; ++r) {
        const Complex amp = code.amplitude(r, input);
        if (amp == Complex(0.0)) continue;
        for (int z = 0; z < surv_dim; ++z) {
          const double sign = (std::popcount(static_cast<unsigned>(z & a)) & 1) ? -1.0 : 1.0;
          v(r * surv_dim + a, e * surv_dim + z) = sign * z_weight[static_cast<std::size_t>(z)] * amp;
        }
      }
    }
  }
  return v;
}

// Entropy of V V^dagger through whichever of V V^dagger, V^dagger V is smaller.
double factor_entropy(const Matrix& v) {
  if (v.rows() <= v.cols()) return von_neumann_entropy(Matrix(v * v.adjoint()));
  return von_neumann_entropy(Matrix(v.adjoint() * v));
}

// tr_R of V V^dagger.
Matrix trace_reference(const Matrix& v, int ref) {
  const auto surv_dim = v.rows() / ref;
  Matrix out = Matrix::Zero(surv_dim, surv_dim);
  for (int r = 0; r < ref; ++r) {
    const auto rows = v.middleRows(r * surv_dim, surv_dim);
    out.noalias() += rows * rows.adjoint();
  }
  return out;
}

std::string pattern_string(unsigned mask, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((mask >> (n - 1 - j)) & 1u) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

double pattern_weight(double q, unsigned mask, int n) {
  const int k = std::popcount(mask);
  return std::pow(q, k) * std::pow(1.0 - q, n - k);
}

}  // namespace

// ---------------------------------------------------------------------------
// CodeState

CodeState::CodeState(int n_uses, int ref_dim, Vector amplitudes)
    : n_uses_(n_uses), ref_dim_(ref_dim), amplitudes_(std::move(amplitudes)) {
  if (n_uses < 1 || n_uses > 16) throw std::invalid_argument("CodeState: bad number of uses");
  if (ref_dim < 1) throw std::invalid_argument("CodeState: ref_dim must be >= 1");
  if (amplitudes_.size() != static_cast<Eigen::Index>(ref_dim) * (Eigen::Index{1} << n_uses)) {
    throw DimensionError("CodeState: amplitude vector has wrong length");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw InvariantError("CodeState: amplitudes not normalized");
  }
}

CodeState CodeState::normalized(int n_uses, int ref_dim, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvariantError("CodeState: zero amplitude vector");
  return CodeState(n_uses, ref_dim, amplitudes / norm);
}

Matrix CodeState::input_state() const {
  const int d = input_dim();
  Matrix rho = Matrix::Zero(d, d);
  for (int r = 0; r < ref_dim_; ++r) {
    const auto row = amplitudes_.segment(static_cast<Eigen::Index>(r) * d, d);
    rho.noalias() += row * row.adjoint();
  }
  return rho;
}

// ---------------------------------------------------------------------------
// Repetition codes

double u_value(double lambda, double p, int n) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::domain_error("u_value: lambda outside [0,1]");
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("u_value: p outside [0,1/2]");
  if (n < 1) throw std::domain_error("u_value: n must be >= 1");
  return std::sqrt(std::max(0.0, 1.0 - 4.0 * lambda * (1.0 - lambda) * contrast_deficit(p, n)));
}

double repetition_ci(const ChannelParams& params, const RepetitionParams& rep) {
  validate(params);
  if (rep.n < 1) throw std::domain_error("repetition_ci: n must be >= 1");
  if (!(rep.lambda >= 0.0 && rep.lambda <= 1.0)) {
    throw std::domain_error("repetition_ci: lambda outside [0,1]");
  }
  if (params.p > 0.5) throw std::domain_error("repetition_ci: p outside [0,1/2]");
  const double lambda = rep.lambda <= 0.5 ? rep.lambda : 1.0 - rep.lambda;
  const double survive = std::pow(1.0 - params.q, rep.n);
  const double erase = std::pow(params.q, rep.n);
  const double h_lambda = binary_entropy(lambda);
  const double h_mixed = binary_entropy(repetition_small_eigenvalue(lambda, params.p, rep.n));
  return (survive - erase) * h_lambda - survive * h_mixed;
}

WeightOptimum repetition_ci_opt(const ChannelParams& params, int n) {
  validate(params);
  const Maximum1D best = maximize_weight(
      [&](double lambda) { return repetition_ci(params, {n, lambda}); }, kLambdaStep, kLambdaTol);
  return {best.value, best.argument};
}

CodeState repetition_code(const RepetitionParams& rep) {
  if (rep.n < 1) throw std::invalid_argument("repetition_code: n must be >= 1");
  if (!(rep.lambda >= 0.0 && rep.lambda <= 1.0)) {
    throw std::domain_error("repetition_code: lambda outside [0,1]");
  }
  const int d = 1 << rep.n;
  Vector amps = Vector::Zero(2 * d);
  amps(0) = std::sqrt(rep.lambda);
  amps(d + d - 1) = std::sqrt(1.0 - rep.lambda);
  return CodeState::normalized(rep.n, 2, std::move(amps));
}

CodeState product_code(const CodeState& a, const CodeState& b) {
  const int n = a.n_uses() + b.n_uses();
  const int ref = a.ref_dim() * b.ref_dim();
  Vector amps(static_cast<Eigen::Index>(ref) << n);
  for (int ra = 0; ra < a.ref_dim(); ++ra) {
    for (int rb = 0; rb < b.ref_dim(); ++rb) {
      for (int ia = 0; ia < a.input_dim(); ++ia) {
        for (int ib = 0; ib < b.input_dim(); ++ib) {
          const long r = static_cast<long>(ra) * b.ref_dim() + rb;
          const long i = static_cast<long>(ia) * b.input_dim() + ib;
          amps((r << n) + i) = a.amplitude(ra, ia) * b.amplitude(rb, ib);
        }
      }
    }
  }
  return CodeState::normalized(n, ref, std::move(amps));
}

double threshold_f(double p, double lambda, int n) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw std::domain_error("threshold_f: lambda must be in (0,1)");
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("threshold_f: p outside [0,1/2]");
  if (n < 1) throw std::domain_error("threshold_f: n must be >= 1");
  return binary_entropy(repetition_small_eigenvalue(lambda, p, n)) / binary_entropy(lambda);
}

// ---------------------------------------------------------------------------
// Pattern decomposition

std::vector<ErasurePatternBlock> pattern_decompose(const CodeState& code, const ChannelParams& params,
                                                   int n) {
  validate(params);
  if (code.n_uses() != n) throw DimensionError("pattern_decompose: code has a different number of uses");
  require_uses(n, kDefaultMaxUses, "pattern_decompose");
  std::vector<ErasurePatternBlock> blocks;
  blocks.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const Matrix v = pattern_factor(code, params.p, mask);
    blocks.push_back({pattern_string(mask, n), pattern_weight(params.q, mask, n), code.ref_dim(),
                      v * v.adjoint()});
  }
  return blocks;
}

double multiletter_ci(const CodeState& code, const ChannelParams& params, int n, int max_uses) {
  validate(params);
  require_uses(n, max_uses, "multiletter_ci");
  if (code.n_uses() != n) throw DimensionError("multiletter_ci: code has a different number of uses");
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const double w = pattern_weight(params.q, mask, n);
    if (w == 0.0) continue;
    const Matrix v = pattern_factor(code, params.p, mask);
    const double output = von_neumann_entropy(trace_reference(v, code.ref_dim()));
    const double joint = factor_entropy(v);
    total += w * (output - joint);
  }
  return total;
}

double brute_force_ci(const CodeState& code, const ChannelParams& params, int n) {
  require_uses(n, kBruteForceMaxUses, "brute_force_ci");
  if (code.n_uses() != n) throw DimensionError("brute_force_ci: code has a different number of uses");
  const KrausSet single = dephrasure_kraus(params);
  KrausSet channel = single;
  for (int i = 1; i < n; ++i) channel = KrausSet::tensor(channel, single);

  std::vector<Matrix> extended;
  extended.reserve(channel.operators().size());
  const Matrix id = Matrix::Identity(code.ref_dim(), code.ref_dim());
  for (const auto& k : channel.operators()) extended.push_back(kron(id, k));
  const KrausSet with_ref(code.ref_dim() * channel.in_dim(), code.ref_dim() * channel.out_dim(),
                          std::move(extended));

  const Matrix psi = code.amplitudes() * code.amplitudes().adjoint();
  return von_neumann_entropy(apply_kraus(channel, code.input_state())) -
         von_neumann_entropy(apply_kraus(with_ref, psi));
}

// ---------------------------------------------------------------------------
// Z-diagonal codes

CodeState zdiag_code(std::span<const double> schmidt) {
  const auto len = schmidt.size();
  if (len < 2 || !std::has_single_bit(len)) {
    throw std::invalid_argument("zdiag_code: length must be a power of two >= 2");
  }
  const int n = std::countr_zero(len);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(len * len));
  for (std::size_t s = 0; s < len; ++s) {
    if (!(schmidt[s] >= 0.0)) throw std::domain_error("zdiag_code: negative Schmidt coefficient");
    amps(static_cast<Eigen::Index>(s * len + s)) = schmidt[s];
  }
  return CodeState::normalized(n, static_cast<int>(len), std::move(amps));
}

namespace {

std::vector<double> to_schmidt(const std::vector<double>& weights) {
  std::vector<double> s(weights.size());
  std::transform(weights.begin(), weights.end(), s.begin(), [](double w) { return std::sqrt(w); });
  return s;
}

// Squared Schmidt weights of the repetition code on n qubits.
std::vector<double> repetition_weights(int n, double lambda) {
  std::vector<double> w(std::size_t{1} << n, 0.0);
  w.front() = lambda;
  w.back() = 1.0 - lambda;
  return w;
}

std::vector<double> product_weights(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> w;
  w.reserve(a.size() * b.size());
  for (double x : a) {
    for (double y : b) w.push_back(x * y);
  }
  return w;
}

void normalize_simplex(std::vector<double>& w) {
  double sum = 0.0;
  for (double& x : w) {
    x = std::max(0.0, x);
    sum += x;
  }
  for (double& x : w) x /= sum;
}

}  // namespace

ZdiagOptimum optimize_zdiag(const ChannelParams& params, int n, std::uint64_t seed, int random_starts) {
  validate(params);
  require_uses(n, kDefaultMaxUses, "optimize_zdiag");
  const std::size_t dim = std::size_t{1} << n;
  auto objective = [&](const std::vector<double>& w) {
    const auto s = to_schmidt(w);
    return multiletter_ci(zdiag_code(s), params, n);
  };

  // Warm starts: products of optimal repetition codes rep_m^{(x) floor(n/m)},
  // padded with the single-letter optimum.
  std::vector<std::vector<double>> starts;
  const WeightOptimum single = repetition_ci_opt(params, 1);
  const auto single_w = repetition_weights(1, single.lambda_star);
  for (int m = 1; m <= n; ++m) {
    const auto rep_w = repetition_weights(m, repetition_ci_opt(params, m).lambda_star);
    std::vector<double> w{1.0};
    int used = 0;
    while (used + m <= n) {
      w = product_weights(w, rep_w);
      used += m;
    }
    for (; used < n; ++used) w = product_weights(w, single_w);
    starts.push_back(std::move(w));
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  for (int i = 0; i < random_starts; ++i) {
    std::vector<double> w(dim);
    for (auto& x : w) x = expo(rng);
    normalize_simplex(w);
    starts.push_back(std::move(w));
  }

  ZdiagOptimum best{-std::numeric_limits<double>::infinity(), {}};
  for (auto w : starts) {
    double f = objective(w);
    double step = 0.1;
    for (int sweep = 0; sweep < 200 && step > 1e-7; ++sweep) {
      bool improved = false;
      for (std::size_t s = 0; s < dim; ++s) {
        for (double sign : {1.0, -1.0}) {
          auto trial = w;
          trial[s] += sign * step;
          normalize_simplex(trial);
          const double ft = objective(trial);
          if (ft > f) {
            w = std::move(trial);
            f = ft;
            improved = true;
            break;
          }
        }
      }
      if (!improved) step *= 0.5;
    }
    if (f > best.value) best = {f, to_schmidt(w)};
  }
  return best;
}

// ---------------------------------------------------------------------------
// chi_3

CodeState chi3_code(Complex c1, Complex d1, Complex c2, Complex d2) {
  Vector amps = Vector::Zero(32);
  amps(0b00000) = c1;
  amps(0b00001) = d1;
  amps(0b11110) = c1;
  amps(0b11111) = d1;
  amps(0b01010) = c2;
  amps(0b01011) = d2;
  amps(0b10100) = d2;  // X|psi2> = d2|0> + c2|1>
  amps(0b10101) = c2;
  return CodeState::normalized(3, 4, std::move(amps));
}

}  // namespace dephrasure
