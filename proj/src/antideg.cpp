#include "dephrasure/antideg.hpp"

#include <cmath>

namespace dephrasure {

namespace {

// Embeds a 2x2 operator into span{|0>,|1>} of the 3-dim output.
Matrix embed_qubit(const Matrix& m) {
  Matrix out = Matrix::Zero(3, 3);
  out.topLeftCorner(2, 2) = m;
  return out;
}

Matrix erasure_flag(Complex weight) {
  Matrix out = Matrix::Zero(3, 3);
  out(2, 2) = weight;
  return out;
}

Matrix dephase(double p, const Matrix& m) {
  Matrix out = m;
  out(0, 1) *= 1.0 - 2.0 * p;
  out(1, 0) *= 1.0 - 2.0 * p;
  return out;
}

}  // namespace

UsdPovm usd_povm(double p) {
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("usd_povm: p outside [0,1/2]");
  const double pref = 1.0 / (2.0 * (1.0 - p));
  const double off = std::sqrt(p * (1.0 - p));
  UsdPovm povm{Matrix(2, 2), Matrix(2, 2), Matrix::Zero(2, 2)};
  povm.pi0 << pref * p, pref * off, pref * off, pref * (1.0 - p);
  povm.pi1 << pref * p, -pref * off, -pref * off, pref * (1.0 - p);
  povm.pi_e(0, 0) = (1.0 - 2.0 * p) / (1.0 - p);
  return povm;
}

const char* to_string(DegradingMapKind kind) {
  return kind == DegradingMapKind::Trivial ? "trivial" : "usd";
}

DegradingMapKind map_kind_for(const ChannelParams& params) {
  return params.q >= 0.5 ? DegradingMapKind::Trivial : DegradingMapKind::Usd;
}

double erasure_parameter(DegradingMapKind kind, const ChannelParams& params) {
  validate(params);
  const double p = params.p;
  const double q = params.q;
  if (kind == DegradingMapKind::Trivial) {
    if (q == 0.0) throw std::domain_error("erasure_parameter: trivial map undefined at q = 0");
    return (2.0 * q - 1.0) / q;
  }
  // With no dephasing contrast left (or no q-block), any x works; use full erasure.
  if (p == 0.5 || q == 0.0) {
    if (p != 0.5) throw std::domain_error("erasure_parameter: usd map undefined at q = 0");
    return 1.0;
  }
  return 1.0 - (1.0 - q) * (1.0 - 2.0 * p) / q;
}

Matrix apply_degrading_map(DegradingMapKind kind, double p, double x, const Matrix& sigma) {
  if (sigma.rows() != 4 || sigma.cols() != 4) throw DimensionError("degrading map: expected 4x4 input");
  const Matrix flagged = sigma.topLeftCorner(2, 2);
  const Matrix measured = sigma.bottomRightCorner(2, 2);
  if (kind == DegradingMapKind::Trivial) {
    return (1.0 - x) * embed_qubit(dephase(p, flagged)) + erasure_flag(x * flagged.trace()) +
           erasure_flag(measured.trace());
  }
  const UsdPovm povm = usd_povm(p);
  Matrix out = (1.0 - x) * embed_qubit(flagged) + erasure_flag(x * flagged.trace());
  out(0, 0) += (povm.pi0 * measured).trace();
  out(1, 1) += (povm.pi1 * measured).trace();
  out(2, 2) += (povm.pi_e * measured).trace();
  return out;
}

KrausSet antidegrading_map(const ChannelParams& params) {
  validate(params);
  if (params.p > 0.5) throw std::domain_error("antidegrading_map: p outside [0,1/2]");
  if (params.q < curve_k(params.p)) {
    throw NotAntidegradableHere("antidegrading_map: q < k(p), no degrading map constructed");
  }
  const DegradingMapKind kind = map_kind_for(params);
  const double x = erasure_parameter(kind, params);
  const double p = params.p;
  std::vector<Matrix> ops;

  auto from_block0 = [](int row, int col, double w) {
    Matrix k = Matrix::Zero(3, 4);
    k(row, col) = w;
    return k;
  };
  Matrix keep = Matrix::Zero(3, 4);
  keep(0, 0) = 1.0;
  keep(1, 1) = 1.0;

  if (kind == DegradingMapKind::Trivial) {
    Matrix keep_z = keep;
    keep_z(1, 1) = -1.0;
    ops.push_back(std::sqrt((1.0 - x) * (1.0 - p)) * keep);
    ops.push_back(std::sqrt((1.0 - x) * p) * keep_z);
    ops.push_back(from_block0(2, 0, std::sqrt(x)));
    ops.push_back(from_block0(2, 1, std::sqrt(x)));
    ops.push_back(from_block0(2, 2, 1.0));
    ops.push_back(from_block0(2, 3, 1.0));
  } else {
    const double scale = 1.0 / std::sqrt(2.0 * (1.0 - p));
    Matrix k0 = Matrix::Zero(3, 4);
    k0(0, 2) = scale * std::sqrt(p);
    k0(0, 3) = scale * std::sqrt(1.0 - p);
    Matrix k1 = Matrix::Zero(3, 4);
    k1(1, 2) = scale * std::sqrt(p);
    k1(1, 3) = -scale * std::sqrt(1.0 - p);
    ops.push_back(std::sqrt(1.0 - x) * keep);
    ops.push_back(from_block0(2, 0, std::sqrt(x)));
    ops.push_back(from_block0(2, 1, std::sqrt(x)));
    ops.push_back(std::move(k0));
    ops.push_back(std::move(k1));
    ops.push_back(from_block0(2, 2, std::sqrt((1.0 - 2.0 * p) / (1.0 - p))));
  }
  return KrausSet(4, 3, std::move(ops));
}

DegradingMapReport verify_antidegradable(const ChannelParams& params, double tol) {
  validate(params);
  DegradingMapReport report;
  report.params = params;
  report.map_kind = map_kind_for(params);
  report.x_param = erasure_parameter(report.map_kind, params);

  const double p = params.p;
  const DegradingMapKind kind = report.map_kind;
  const double x = report.x_param;
  const ChoiMatrix target = choi_of(dephrasure_kraus(params));

  // CP of the degrading map from its explicit action, independent of any Kraus form.
  const ChoiMatrix map_choi = choi_of_map(
      4, 3, [&](const Matrix& s) { return apply_degrading_map(kind, p, x, s); });
  report.cp_min_eigenvalue = min_eigenvalue(map_choi);

  Matrix composed;
  if (params.p <= 0.5 && params.q >= curve_k(params.p)) {
    composed = choi_of(KrausSet::compose(antidegrading_map(params), complementary_kraus(params))).matrix();
  } else {
    const KrausSet nc = complementary_kraus(params);
    composed = choi_of_map(2, 3, [&](const Matrix& s) {
                 return apply_degrading_map(kind, p, x, apply_kraus(nc, s));
               }).matrix();
  }
  report.composition_residual = (composed - target.matrix()).cwiseAbs().maxCoeff();
  report.antidegradable = report.composition_residual <= tol && report.cp_min_eigenvalue >= -tol;
  return report;
}

}  // namespace dephrasure
