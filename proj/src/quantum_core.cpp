#include "dephrasure/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dephrasure {

namespace {

double max_asymmetry(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitian_part(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a nonempty square matrix");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix / PureState

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "DensityMatrix");
  if (max_asymmetry(entries_) > kHermitianTol) {
    throw InvariantError("DensityMatrix: not Hermitian");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    throw InvariantError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(entries_), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kClampWindow) {
    throw InvariantError("DensityMatrix: negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw DimensionError("maximally_mixed: dim must be positive");
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(probabilities.size()),
                          static_cast<Eigen::Index>(probabilities.size()));
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = probabilities[i];
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) {
    throw InvariantError("bloch: vector outside the unit ball");
  }
  Matrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = Complex(0.5 * x, 0.5 * y);
  return DensityMatrix(std::move(m));
}

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("PureState: empty amplitude vector");
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw InvariantError("PureState: amplitudes not normalized");
  }
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(amplitudes_ * amplitudes_.adjoint());
}

// ---------------------------------------------------------------------------
// KrausSet / ChoiMatrix

KrausSet::KrausSet(int in_dim, int out_dim, std::vector<Matrix> operators)
    : in_dim_(in_dim), out_dim_(out_dim), operators_(std::move(operators)) {
  if (in_dim <= 0 || out_dim <= 0) throw DimensionError("KrausSet: dims must be positive");
  if (operators_.empty()) throw InvariantError("KrausSet: no operators");
  Matrix sum = Matrix::Zero(in_dim, in_dim);
  for (const auto& k : operators_) {
    if (k.rows() != out_dim || k.cols() != in_dim) {
      throw DimensionError("KrausSet: operator has wrong shape");
    }
    sum.noalias() += k.adjoint() * k;
  }
  const double err = (sum - Matrix::Identity(in_dim, in_dim)).cwiseAbs().maxCoeff();
  if (err > kCompletenessTol) {
    throw InvariantError("KrausSet: completeness violated by " + std::to_string(err));
  }
}

KrausSet KrausSet::identity(int dim) {
  return KrausSet(dim, dim, {Matrix::Identity(dim, dim)});
}

KrausSet KrausSet::compose(const KrausSet& outer, const KrausSet& inner) {
  if (outer.in_dim() != inner.out_dim()) throw DimensionError("compose: dimension mismatch");
  std::vector<Matrix> ops;
  ops.reserve(outer.operators().size() * inner.operators().size());
  for (const auto& a : outer.operators()) {
    for (const auto& b : inner.operators()) ops.push_back(a * b);
  }
  return KrausSet(inner.in_dim(), outer.out_dim(), std::move(ops));
}

KrausSet KrausSet::tensor(const KrausSet& a, const KrausSet& b) {
  std::vector<Matrix> ops;
  ops.reserve(a.operators().size() * b.operators().size());
  for (const auto& ka : a.operators()) {
    for (const auto& kb : b.operators()) ops.push_back(kron(ka, kb));
  }
  return KrausSet(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(), std::move(ops));
}

ChoiMatrix::ChoiMatrix(int in_dim, int out_dim, Matrix entries)
    : in_dim_(in_dim), out_dim_(out_dim), entries_(std::move(entries)) {
  if (entries_.rows() != in_dim * out_dim || entries_.cols() != in_dim * out_dim) {
    throw DimensionError("ChoiMatrix: wrong shape");
  }
}

Matrix ChoiMatrix::trace_out_output() const {
  Matrix t = Matrix::Zero(in_dim_, in_dim_);
  for (int i = 0; i < in_dim_; ++i) {
    for (int j = 0; j < in_dim_; ++j) {
      Complex s = 0.0;
      for (int o = 0; o < out_dim_; ++o) s += entries_(i * out_dim_ + o, j * out_dim_ + o);
      t(i, j) = s;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Entropies

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: x outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -(x * std::log2(x) + (1.0 - x) * std::log1p(-x) / std::log(2.0));
}

double spectrum_entropy(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (double lam : eigenvalues) {
    if (lam < -kRejectNegative) throw InvariantError("entropy: eigenvalue below -1e-8");
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

double von_neumann_entropy(const Matrix& rho) {
  require_square(rho, "von_neumann_entropy");
  if (max_asymmetry(rho) > kRejectNegative) {
    throw InvariantError("von_neumann_entropy: matrix is not Hermitian");
  }
  if (rho.rows() == 1) return spectrum_entropy(Eigen::VectorXd::Constant(1, rho(0, 0).real()));
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(rho), Eigen::EigenvaluesOnly);
  return spectrum_entropy(es.eigenvalues());
}

double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

// ---------------------------------------------------------------------------
// Channels and subsystems

Matrix apply_kraus(const KrausSet& kraus, const Matrix& rho) {
  if (rho.rows() != kraus.in_dim() || rho.cols() != kraus.in_dim()) {
    throw DimensionError("apply_kraus: state dimension does not match channel input");
  }
  Matrix out = Matrix::Zero(kraus.out_dim(), kraus.out_dim());
  for (const auto& k : kraus.operators()) out.noalias() += k * rho * k.adjoint();
  return out;
}

DensityMatrix apply_kraus(const KrausSet& kraus, const DensityMatrix& rho) {
  return DensityMatrix(hermitian_part(apply_kraus(kraus, rho.matrix())));
}

Matrix partial_trace(const Matrix& rho, std::span<const int> dims, std::span<const int> keep) {
  if (keep.empty()) throw DimensionError("partial_trace: empty keep set");
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw DimensionError("partial_trace: nonpositive subsystem dimension");
    total *= d;
  }
  if (total != rho.rows() || rho.rows() != rho.cols()) {
    throw DimensionError("partial_trace: product of dims does not match state");
  }
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) {
    if (k < 0 || k >= n || kept[static_cast<std::size_t>(k)]) {
      throw DimensionError("partial_trace: invalid keep index");
    }
    kept[static_cast<std::size_t>(k)] = true;
  }

  // Split every full index into (kept index, traced index).
  std::vector<long> kept_idx(static_cast<std::size_t>(total)), traced_idx(static_cast<std::size_t>(total));
  long kept_dim = 1;
  for (int i = 0; i < n; ++i) {
    if (kept[static_cast<std::size_t>(i)]) kept_dim *= dims[static_cast<std::size_t>(i)];
  }
  for (long full = 0; full < total; ++full) {
    long rem = full, k = 0, t = 0, kmul = 1, tmul = 1;
    for (int i = n - 1; i >= 0; --i) {
      const int d = dims[static_cast<std::size_t>(i)];
      const long digit = rem % d;
      rem /= d;
      if (kept[static_cast<std::size_t>(i)]) {
        k += digit * kmul;
        kmul *= d;
      } else {
        t += digit * tmul;
        tmul *= d;
      }
    }
    kept_idx[static_cast<std::size_t>(full)] = k;
    traced_idx[static_cast<std::size_t>(full)] = t;
  }

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (long i = 0; i < total; ++i) {
    for (long j = 0; j < total; ++j) {
      if (traced_idx[static_cast<std::size_t>(i)] == traced_idx[static_cast<std::size_t>(j)]) {
        out(kept_idx[static_cast<std::size_t>(i)], kept_idx[static_cast<std::size_t>(j)]) += rho(i, j);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> dims,
                            std::span<const int> keep) {
  return DensityMatrix(hermitian_part(partial_trace(rho.matrix(), dims, keep)));
}

PureState purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  Vector psi = Vector::Zero(d * d);
  const Matrix& m = rho.matrix();
  const double off_diag = (m - Matrix(m.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  if (off_diag == 0.0) {
    for (int i = 0; i < d; ++i) psi(i * d + i) = std::sqrt(std::max(0.0, m(i, i).real()));
  } else {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
    for (int i = 0; i < d; ++i) {
      const double w = std::sqrt(std::max(0.0, es.eigenvalues()(i)));
      psi.segment(i * d, d) = w * es.eigenvectors().col(i);
    }
  }
  psi /= psi.norm();
  return PureState(std::move(psi));
}

ChoiMatrix choi_of(const KrausSet& kraus) {
  const int din = kraus.in_dim();
  const int dout = kraus.out_dim();
  Matrix c = Matrix::Zero(din * dout, din * dout);
  Vector w(din * dout);
  for (const auto& k : kraus.operators()) {
    for (int i = 0; i < din; ++i) w.segment(i * dout, dout) = k.col(i);
    c.noalias() += w * w.adjoint();
  }
  return ChoiMatrix(din, dout, std::move(c));
}

ChoiMatrix choi_of_map(int in_dim, int out_dim, const std::function<Matrix(const Matrix&)>& map) {
  Matrix c = Matrix::Zero(in_dim * out_dim, in_dim * out_dim);
  for (int i = 0; i < in_dim; ++i) {
    for (int j = 0; j < in_dim; ++j) {
      Matrix unit = Matrix::Zero(in_dim, in_dim);
      unit(i, j) = 1.0;
      const Matrix image = map(unit);
      if (image.rows() != out_dim || image.cols() != out_dim) {
        throw DimensionError("choi_of_map: map output has wrong shape");
      }
      c.block(i * out_dim, j * out_dim, out_dim, out_dim) = image;
    }
  }
  return ChoiMatrix(in_dim, out_dim, std::move(c));
}

double min_eigenvalue(const ChoiMatrix& choi) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(choi.matrix()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_completely_positive(const ChoiMatrix& choi, double tol) {
  if (max_asymmetry(choi.matrix()) > kHermitianTol) return false;
  return min_eigenvalue(choi) >= -tol;
}

KrausSet complementary(const KrausSet& kraus) {
  const int env = static_cast<int>(kraus.operators().size());
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(kraus.out_dim()));
  for (int b = 0; b < kraus.out_dim(); ++b) {
    Matrix f(env, kraus.in_dim());
    for (int k = 0; k < env; ++k) f.row(k) = kraus.operators()[static_cast<std::size_t>(k)].row(b);
    ops.push_back(std::move(f));
  }
  return KrausSet(kraus.in_dim(), env, std::move(ops));
}

double coherent_information(const KrausSet& kraus, const DensityMatrix& rho) {
  const int d = rho.dim();
  const PureState psi = purify(rho);
  std::vector<Matrix> extended;
  extended.reserve(kraus.operators().size());
  const Matrix id = Matrix::Identity(d, d);
  for (const auto& k : kraus.operators()) extended.push_back(kron(id, k));
  const KrausSet id_n(d * kraus.in_dim(), d * kraus.out_dim(), std::move(extended));
  const Matrix joint = apply_kraus(id_n, Matrix(psi.amplitudes() * psi.amplitudes().adjoint()));
  return von_neumann_entropy(apply_kraus(kraus, rho.matrix())) - von_neumann_entropy(joint);
}

}  // namespace dephrasure
