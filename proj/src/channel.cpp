#include "dephrasure/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "dephrasure/maximize.hpp"

namespace dephrasure {

namespace {

constexpr double kZStep = 1e-3;
constexpr double kZTol = 1e-10;
// Below this distance from p = 1/2 the closed form for j(p) loses digits to
// cancellation and its Taylor series is used instead.
constexpr double kJSeriesWindow = 1e-2;

void require_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error(std::string(what) + ": outside [0,1]");
}

void require_half(double p, const char* what) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error(std::string(what) + ": p outside [0,1/2]");
}

// Smaller eigenvalue (1 - r)/2 of a qubit state with Bloch radius^2 r2,
// computed without cancellation.
double small_eigenvalue(double r2) {
  r2 = std::min(1.0, std::max(0.0, r2));
  return 0.5 * (1.0 - r2) / (1.0 + std::sqrt(r2));
}

// Smaller eigenvalue of Phi_{p,z} given 1 - z^2.
double phi_small_eigenvalue(double p, double one_minus_z2) {
  const double c = 4.0 * p * (1.0 - p) * one_minus_z2;
  const double k = std::sqrt(std::max(0.0, 1.0 - c));
  return 0.5 * c / (1.0 + k);
}

}  // namespace

void validate(const ChannelParams& params, bool region_square) {
  const double hi = region_square ? 0.5 : 1.0;
  if (!(params.p >= 0.0 && params.p <= hi) || !(params.q >= 0.0 && params.q <= hi)) {
    throw std::domain_error("ChannelParams: probability out of range");
  }
}

KrausSet dephasing_kraus(double p) {
  require_probability(p, "dephasing_kraus");
  Matrix id = Matrix::Identity(2, 2);
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return KrausSet(2, 2, {std::sqrt(1.0 - p) * id, std::sqrt(p) * z});
}

KrausSet dephrasure_kraus(const ChannelParams& params) {
  validate(params);
  const double p = params.p;
  const double q = params.q;
  Matrix emb_id = Matrix::Zero(3, 2);
  emb_id(0, 0) = 1.0;
  emb_id(1, 1) = 1.0;
  Matrix emb_z = Matrix::Zero(3, 2);
  emb_z(0, 0) = 1.0;
  emb_z(1, 1) = -1.0;
  Matrix erase0 = Matrix::Zero(3, 2);
  erase0(2, 0) = 1.0;
  Matrix erase1 = Matrix::Zero(3, 2);
  erase1(2, 1) = 1.0;
  return KrausSet(2, 3,
                  {std::sqrt((1.0 - q) * (1.0 - p)) * emb_id, std::sqrt((1.0 - q) * p) * emb_z,
                   std::sqrt(q) * erase0, std::sqrt(q) * erase1});
}

Vector phi_state(double p, int x) {
  Vector v(2);
  v(0) = std::sqrt(1.0 - p);
  v(1) = (x == 0 ? 1.0 : -1.0) * std::sqrt(p);
  return v;
}

KrausSet complementary_kraus(const ChannelParams& params) {
  validate(params);
  const double q = params.q;
  Matrix copy = Matrix::Zero(4, 2);
  copy(0, 0) = 1.0;
  copy(1, 1) = 1.0;
  std::vector<Matrix> ops{std::sqrt(q) * copy};
  for (int x = 0; x < 2; ++x) {
    Matrix k = Matrix::Zero(4, 2);
    k.block(2, x, 2, 1) = std::sqrt(1.0 - q) * phi_state(params.p, x);
    ops.push_back(std::move(k));
  }
  return KrausSet(2, 4, std::move(ops));
}

DensityMatrix complementary_apply(const ChannelParams& params, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionError("complementary_apply: expected a qubit state");
  validate(params);
  Matrix out = Matrix::Zero(4, 4);
  out.block(0, 0, 2, 2) = params.q * rho.matrix();
  for (int x = 0; x < 2; ++x) {
    const Vector phi = phi_state(params.p, x);
    out.block(2, 2, 2, 2) += (1.0 - params.q) * rho(x, x).real() * phi * phi.adjoint();
  }
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

double curve_g(double p) {
  require_half(p, "curve_g");
  const double a = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
  return a / (1.0 + a);
}

double curve_j(double p) {
  require_half(p, "curve_j");
  if (p == 0.0) return 0.5;
  const double d = 0.5 - p;
  if (d < kJSeriesWindow) {
    const double d2 = d * d;
    return d2 * (8.0 / 3.0 + d2 * (-224.0 / 45.0 + d2 * 10624.0 / 945.0));
  }
  const double t = 2.0 * p * (1.0 - p) * std::log((1.0 - p) / p);
  return (1.0 - 2.0 * p - t) / (2.0 - 4.0 * p - t);
}

double curve_k(double p) {
  require_half(p, "curve_k");
  return (1.0 - 2.0 * p) / (2.0 * (1.0 - p));
}

RegionCurves region_curves(double p) { return {curve_g(p), curve_j(p), curve_k(p)}; }

Region classify(const ChannelParams& params) {
  validate(params);
  if (params.p > 0.5) throw std::domain_error("classify: p outside [0,1/2]");
  const RegionCurves c = region_curves(params.p);
  if (params.q >= c.k) return Region::Antidegradable;
  if (params.q >= c.g) return Region::NoCoherentInfo;
  if (params.q >= c.j) return Region::Fish;
  return Region::MixedOptimal;
}

const char* to_string(Region region) {
  switch (region) {
    case Region::MixedOptimal: return "mixed_optimal";
    case Region::Fish: return "fish";
    case Region::NoCoherentInfo: return "no_coherent_info";
    case Region::Antidegradable: return "antidegradable";
  }
  return "unknown";
}

DensityMatrix phi_matrix(double p, double z) {
  require_probability(p, "phi_matrix");
  if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("phi_matrix: z outside [-1,1]");
  Matrix m(2, 2);
  const double off = z * std::sqrt(p * (1.0 - p));
  m << 1.0 - p, off, off, p;
  return DensityMatrix(std::move(m));
}

double coherent_info_weight(const ChannelParams& params, double w) {
  validate(params);
  if (!(w >= 0.0 && w <= 1.0)) throw std::domain_error("coherent_info_weight: w outside [0,1]");
  const double one_minus_z2 = 4.0 * w * (1.0 - w);
  const double phi_entropy = binary_entropy(phi_small_eigenvalue(params.p, one_minus_z2));
  return (1.0 - 2.0 * params.q) * binary_entropy(w) - (1.0 - params.q) * phi_entropy;
}

double coherent_info_z(const ChannelParams& params, double z) {
  if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("coherent_info_z: z outside [-1,1]");
  return coherent_info_weight(params, 0.5 * (1.0 - std::abs(z)));
}

double coherent_info_xz(const ChannelParams& params, double x, double z) {
  validate(params);
  const double r2 = x * x + z * z;
  if (r2 > 1.0 + 1e-12) throw std::domain_error("coherent_info_xz: Bloch vector outside the unit ball");
  const double p = params.p;
  const double q = params.q;
  const double shrink = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
  const double s_dephased = binary_entropy(small_eigenvalue(shrink * x * x + z * z));
  const double s_input = binary_entropy(small_eigenvalue(r2));
  const double s_phi = binary_entropy(phi_small_eigenvalue(p, std::max(0.0, 1.0 - z * z)));
  return (1.0 - q) * s_dephased - q * s_input - (1.0 - q) * s_phi;
}

SingleLetterResult single_letter_ci(const ChannelParams& params) {
  validate(params);
  // z in [0, 1] <-> w = (1 - z) / 2 in [0, 1/2]; z-grid spacing 1e-3.
  const Maximum1D best = maximize_weight(
      [&params](double w) { return coherent_info_weight(params, w); }, 0.5 * kZStep, 0.5 * kZTol);
  return {best.value, 1.0 - 2.0 * best.argument};
}

XzMaximum xz_grid_maximum(const ChannelParams& params, double step) {
  validate(params);
  if (!(step > 0.0 && step <= 1.0)) throw std::domain_error("xz_grid_maximum: bad step");
  const int n = static_cast<int>(std::ceil(1.0 / step));
  XzMaximum best{coherent_info_xz(params, 0.0, 0.0), 0.0, 0.0};
  for (int i = 0; i <= n; ++i) {
    const double x = std::min(1.0, i * step);
    for (int k = 0; k <= n; ++k) {
      const double z = std::min(1.0, k * step);
      if (x * x + z * z > 1.0) break;
      const double v = coherent_info_xz(params, x, z);
      if (v > best.value) best = {v, x, z};
    }
  }
  return best;
}

}  // namespace dephrasure
