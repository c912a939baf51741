#pragma once

// Dense complex linear algebra and quantum-information primitives.
//
// Conventions: entropies are in bits; composite systems are ordered with the
// first factor as the most significant index (|a>|b> -> a * dim_b + b).

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace dephrasure {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when operand dimensions do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a matrix violates a state or channel invariant.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kClampWindow = 1e-10;   // [-kClampWindow, 0) -> 0
inline constexpr double kRejectNegative = 1e-8; // eigenvalue < -this is an error
inline constexpr double kCompletenessTol = 1e-12;

class PureState;

/// Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates the invariants; throws InvariantError on violation.
  explicit DensityMatrix(Matrix entries);

  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix diagonal(std::span<const double> probabilities);
  /// Qubit state from its Bloch vector.
  static DensityMatrix bloch(double x, double y, double z);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int r, int c) const { return entries_(r, c); }

 private:
  Matrix entries_;
};

/// Unit-norm state vector.
class PureState {
 public:
  explicit PureState(Vector amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  DensityMatrix projector() const;

 private:
  Vector amplitudes_;
};

/// Kraus representation of a CPTP map; completeness is checked on construction.
class KrausSet {
 public:
  KrausSet(int in_dim, int out_dim, std::vector<Matrix> operators);

  static KrausSet identity(int dim);
  /// Kraus set of `outer` applied after `inner`.
  static KrausSet compose(const KrausSet& outer, const KrausSet& inner);
  /// Kraus set of the product map a (x) b.
  static KrausSet tensor(const KrausSet& a, const KrausSet& b);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<Matrix>& operators() const { return operators_; }

 private:
  int in_dim_;
  int out_dim_;
  std::vector<Matrix> operators_;
};

/// Choi matrix (id (x) map)(sum_ij |ii><jj|), input factor first.
class ChoiMatrix {
 public:
  ChoiMatrix(int in_dim, int out_dim, Matrix entries);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const Matrix& matrix() const { return entries_; }

  /// Partial trace over the output factor; equals identity for trace-preserving maps.
  Matrix trace_out_output() const;

 private:
  int in_dim_;
  int out_dim_;
  Matrix entries_;
};

Matrix kron(const Matrix& a, const Matrix& b);

double binary_entropy(double x);

/// Shannon entropy (bits) of a spectrum; applies the clamping rules of
/// von_neumann_entropy to slightly negative entries.
double spectrum_entropy(const Eigen::VectorXd& eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of a raw matrix. Rejects asymmetry above 1e-8 and eigenvalues
/// below -1e-8; the trace is not required to be one.
double von_neumann_entropy(const Matrix& rho);

Matrix apply_kraus(const KrausSet& kraus, const Matrix& rho);
DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho);

Matrix partial_trace(const Matrix& rho, std::span<const int> dims, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep);

/// Purification on (reference (x) system); the reference dimension equals rho.dim().
PureState purify(const DensityMatrix& rho);

ChoiMatrix choi_of(const KrausSet& kraus);
/// Choi matrix of an arbitrary linear map given by its action on matrices.
ChoiMatrix choi_of_map(int in_dim, int out_dim, const std::function<Matrix(const Matrix&)>& map);

double min_eigenvalue(const ChoiMatrix& choi);
bool is_completely_positive(const ChoiMatrix& choi, double tol);

/// Complementary channel from the canonical Stinespring isometry of `kraus`
/// (environment dimension = number of Kraus operators).
KrausSet complementary(const KrausSet& kraus);

/// I_c(rho, N) = S(N(rho)) - S((id (x) N)(purify(rho))).
double coherent_information(const KrausSet& kraus, const DensityMatrix& rho);

}  // namespace dephrasure
