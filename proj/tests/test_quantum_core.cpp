#include <cmath>
#include <random>

#include "doctest.h"
#include "test_util.hpp"

#include "dephrasure/channel.hpp"

using namespace dephrasure;
using doctest::Approx;

TEST_CASE("binary entropy values") {
  CHECK(binary_entropy(0.5) == Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.25) == Approx(0.811278124459133).epsilon(1e-13));
  CHECK(binary_entropy(0.1) == Approx(0.468995593589281).epsilon(1e-13));
  CHECK(binary_entropy(0.3) == Approx(binary_entropy(0.7)).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.5), std::domain_error);
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == Approx(1.0));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == Approx(2.0));
  CHECK(von_neumann_entropy(DensityMatrix::bloch(0.6, 0.0, 0.8)) == Approx(0.0).epsilon(1e-12));
  const double d[] = {0.9, 0.1};
  CHECK(von_neumann_entropy(DensityMatrix::diagonal(d)) == Approx(0.468995593589281).epsilon(1e-12));
}

TEST_CASE("entropy bounds on random states") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const int dim = 2 + t % 5;
    const DensityMatrix rho = testutil::random_density(rng, dim, 1 + t % dim);
    const double s = von_neumann_entropy(rho);
    CHECK(s >= -1e-12);
    CHECK(s <= std::log2(dim) + 1e-12);
  }
}

TEST_CASE("density matrix validation") {
  Matrix bad = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{bad}, InvariantError);  // trace 2
  Matrix nonherm = Matrix::Zero(2, 2);
  nonherm(0, 0) = 1.0;
  nonherm(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix{nonherm}, InvariantError);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK_THROWS_AS(DensityMatrix{negative}, InvariantError);
  Matrix rect = Matrix::Zero(2, 3);
  CHECK_THROWS(DensityMatrix{rect});
  CHECK_THROWS(DensityMatrix::bloch(1.0, 1.0, 0.0));
}

TEST_CASE("kraus completeness is checked") {
  Matrix half = 0.5 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(KrausSet(2, 2, {half}), InvariantError);
  CHECK_THROWS_AS(KrausSet(2, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(KrausSet(2, 3, {Matrix::Identity(2, 2)}), DimensionError);
}

TEST_CASE("apply_kraus examples") {
  const DensityMatrix rho = DensityMatrix::bloch(0.3, -0.2, 0.5);
  CHECK(testutil::max_abs(apply_kraus(KrausSet::identity(2), rho).matrix() - rho.matrix()) < 1e-15);

  const DensityMatrix plus = DensityMatrix::bloch(1.0, 0.0, 0.0);
  const DensityMatrix dephased = apply_kraus(dephasing_kraus(0.5), plus);
  CHECK(testutil::max_abs(dephased.matrix() - DensityMatrix::maximally_mixed(2).matrix()) < 1e-15);

  const DensityMatrix partial = apply_kraus(dephasing_kraus(0.1), plus);
  CHECK(partial(0, 1).real() == Approx(0.4).epsilon(1e-14));
  CHECK(partial(1, 0).real() == Approx(0.4).epsilon(1e-14));
}

TEST_CASE("entropy invariant under unitary mixing of kraus operators") {
  const KrausSet z = dephasing_kraus(0.3);
  const double c = std::cos(0.7);
  const double s = std::sin(0.7);
  const auto& k = z.operators();
  const KrausSet mixed(2, 2, {c * k[0] + s * k[1], -s * k[0] + c * k[1]});
  const DensityMatrix rho = DensityMatrix::bloch(0.5, 0.1, -0.3);
  CHECK(von_neumann_entropy(apply_kraus(z, rho)) == Approx(von_neumann_entropy(apply_kraus(mixed, rho))).epsilon(1e-13));
}

TEST_CASE("partial trace") {
  const DensityMatrix a = DensityMatrix::bloch(0.2, 0.0, 0.5);
  const DensityMatrix b = DensityMatrix::maximally_mixed(3);
  const Matrix ab = kron(a.matrix(), b.matrix());
  const int dims[] = {2, 3};
  const int keep_a[] = {0};
  const int keep_b[] = {1};
  CHECK(testutil::max_abs(partial_trace(ab, dims, keep_a) - a.matrix()) < 1e-15);
  CHECK(testutil::max_abs(partial_trace(ab, dims, keep_b) - b.matrix()) < 1e-15);

  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const int qubits[] = {2, 2};
  const Matrix proj = bell * bell.adjoint();
  CHECK(testutil::max_abs(partial_trace(proj, qubits, keep_a) - 0.5 * Matrix::Identity(2, 2)) < 1e-15);
  CHECK(testutil::max_abs(partial_trace(proj, qubits, keep_b) - 0.5 * Matrix::Identity(2, 2)) < 1e-15);

  Vector phi = Vector::Zero(4);
  phi(0) = std::sqrt(0.3);
  phi(3) = std::sqrt(0.7);
  const Matrix reduced = partial_trace(Matrix(phi * phi.adjoint()), qubits, keep_a);
  CHECK(reduced(0, 0).real() == Approx(0.3));
  CHECK(reduced(1, 1).real() == Approx(0.7));
  CHECK(std::abs(reduced(0, 1)) < 1e-15);

  const int bad_dims[] = {2, 2};
  CHECK_THROWS_AS(partial_trace(Matrix(Matrix::Identity(3, 3)), bad_dims, keep_a), DimensionError);
}

TEST_CASE("three-party partial trace keeps order") {
  std::mt19937_64 rng(3);
  const DensityMatrix a = testutil::random_density(rng, 2, 2);
  const DensityMatrix b = testutil::random_density(rng, 3, 2);
  const DensityMatrix c = testutil::random_density(rng, 2, 2);
  const Matrix abc = kron(kron(a.matrix(), b.matrix()), c.matrix());
  const int dims[] = {2, 3, 2};
  const int keep[] = {0, 2};
  CHECK(testutil::max_abs(partial_trace(abc, dims, keep) - kron(a.matrix(), c.matrix())) < 1e-14);
}

TEST_CASE("purify") {
  const double diag[] = {0.3, 0.7};
  const PureState psi = purify(DensityMatrix::diagonal(diag));
  CHECK(psi.dim() == 4);
  CHECK(psi.amplitudes()(0).real() == Approx(std::sqrt(0.3)));
  CHECK(psi.amplitudes()(3).real() == Approx(std::sqrt(0.7)));
  CHECK(std::abs(psi.amplitudes()(1)) < 1e-15);
  CHECK(std::abs(psi.amplitudes()(2)) < 1e-15);

  const PureState mm = purify(DensityMatrix::maximally_mixed(2));
  const int dims[] = {2, 2};
  const int keep_ref[] = {0};
  const Matrix ref = partial_trace(Matrix(mm.amplitudes() * mm.amplitudes().adjoint()), dims, keep_ref);
  CHECK(testutil::max_abs(ref - 0.5 * Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("purify round trip on random states") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const int dim = 2 + t % 4;
    const DensityMatrix rho = testutil::random_density(rng, dim, 1 + t % dim);
    const PureState psi = purify(rho);
    const int dims[] = {dim, dim};
    const int keep[] = {1};
    const Matrix back = partial_trace(Matrix(psi.amplitudes() * psi.amplitudes().adjoint()), dims, keep);
    CHECK(testutil::max_abs(back - rho.matrix()) < 1e-10);
  }
}

TEST_CASE("choi matrices and complete positivity") {
  const ChoiMatrix id = choi_of(KrausSet::identity(2));
  Eigen::SelfAdjointEigenSolver<Matrix> es(id.matrix());
  CHECK(es.eigenvalues()(3) == Approx(2.0));
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-14);
  CHECK(std::abs(es.eigenvalues()(2)) < 1e-14);
  CHECK(is_completely_positive(id, 1e-12));

  const ChoiMatrix transpose = choi_of_map(2, 2, [](const Matrix& m) { return Matrix(m.transpose()); });
  CHECK_FALSE(is_completely_positive(transpose, 1e-12));
  CHECK(min_eigenvalue(transpose) == Approx(-1.0));

  const ChoiMatrix z = choi_of(dephasing_kraus(0.2));
  Eigen::SelfAdjointEigenSolver<Matrix> ez(z.matrix());
  CHECK(std::abs(ez.eigenvalues()(0)) < 1e-14);
  CHECK(std::abs(ez.eigenvalues()(1)) < 1e-14);
  CHECK(ez.eigenvalues()(2) == Approx(0.4));
  CHECK(ez.eigenvalues()(3) == Approx(1.6));
  CHECK(is_completely_positive(z, 1e-12));
  CHECK(testutil::max_abs(z.trace_out_output() - Matrix::Identity(2, 2)) < 1e-14);
}

TEST_CASE("choi of kraus form matches choi of its action") {
  const KrausSet k = dephrasure_kraus({0.17, 0.31});
  const ChoiMatrix a = choi_of(k);
  const ChoiMatrix b = choi_of_map(2, 3, [&](const Matrix& m) { return apply_kraus(k, m); });
  CHECK(testutil::max_abs(a.matrix() - b.matrix()) < 1e-15);
}

TEST_CASE("kraus compose and tensor") {
  const KrausSet a = dephasing_kraus(0.1);
  const KrausSet b = dephasing_kraus(0.2);
  const KrausSet ab = KrausSet::compose(a, b);
  // Z_a o Z_b = Z_{a + b - 2ab}
  const ChoiMatrix expected = choi_of(dephasing_kraus(0.1 + 0.2 - 2 * 0.1 * 0.2));
  CHECK(testutil::max_abs(choi_of(ab).matrix() - expected.matrix()) < 1e-14);
  const KrausSet t = KrausSet::tensor(a, dephrasure_kraus({0.3, 0.4}));
  CHECK(t.in_dim() == 4);
  CHECK(t.out_dim() == 6);
  CHECK(t.operators().size() == 8);
  CHECK_THROWS_AS(KrausSet::compose(a, dephrasure_kraus({0.1, 0.1})), DimensionError);
}

TEST_CASE("complementary kraus and coherent information") {
  const KrausSet id = KrausSet::identity(2);
  CHECK(coherent_information(id, DensityMatrix::maximally_mixed(2)) == Approx(1.0));
  const KrausSet env = complementary(dephasing_kraus(0.5));
  CHECK(env.in_dim() == 2);
  CHECK(env.out_dim() == 2);
  // Complete dephasing: the environment learns the Z value.
  const DensityMatrix out = apply_kraus(env, DensityMatrix::bloch(0.0, 0.0, 0.6));
  CHECK(out(0, 0).real() + out(1, 1).real() == Approx(1.0));
  CHECK(coherent_information(dephasing_kraus(0.5), DensityMatrix::maximally_mixed(2)) == Approx(0.0).epsilon(1e-12));
}
