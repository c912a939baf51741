#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "dephrasure/antideg.hpp"
#include "dephrasure/channel.hpp"
#include "dephrasure/compci.hpp"
#include "dephrasure/multiletter.hpp"
#include "dephrasure/sweep.hpp"

namespace dephrasure {

namespace {

constexpr int kAntidegGrid = 40;
constexpr double kContourStep = 5e-3;
constexpr double kRepetitionOffset = 1e-3;
constexpr double kJOffset = 1e-2;
constexpr double kZStarFloor = 1e-4;

VerifyCheck make_check(std::string suite, std::string name, bool passed, double worst, double tolerance,
                       std::string detail = {}) {
  return {std::move(suite), std::move(name), passed, worst, tolerance, std::move(detail)};
}

void antideg_suite(std::vector<VerifyCheck>& out, double tol) {
  double worst_residual = 0.0;
  double worst_eig = std::numeric_limits<double>::infinity();
  double worst_ci = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kAntidegGrid; ++i) {
    const double p = 0.5 * i / (kAntidegGrid - 1);
    const double k = curve_k(p);
    for (int j = 0; j < kAntidegGrid; ++j) {
      const double q = (j == kAntidegGrid - 1) ? 1.0 : k + (1.0 - k) * j / (kAntidegGrid - 1);
      const ChannelParams params{p, q};
      const DegradingMapReport r = verify_antidegradable(params, tol);
      worst_residual = std::max(worst_residual, r.composition_residual);
      worst_eig = std::min(worst_eig, r.cp_min_eigenvalue);
      worst_ci = std::max(worst_ci, single_letter_ci(params).value);
    }
  }
  out.push_back(make_check("antideg", "composition_residual", worst_residual < tol, worst_residual, tol));
  out.push_back(make_check("antideg", "choi_min_eigenvalue", worst_eig > -tol, worst_eig, tol));
  out.push_back(make_check("antideg", "single_letter_nonpositive", worst_ci <= 1e-9, worst_ci, 1e-9));

  const DegradingMapReport below = verify_antidegradable({0.25, 0.2}, tol);
  out.push_back(make_check("antideg", "below_k_not_certified", !below.antidegradable, below.cp_min_eigenvalue,
                           tol, "p=0.25 q=0.2"));
}

void oracle_suite(std::vector<VerifyCheck>& out, std::optional<double> tol_override, std::uint64_t seed) {
  const double tol = tol_override.value_or(1e-9);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const ChannelParams params{i / 49.0, j / 49.0};
      const double direct = coherent_information(dephrasure_kraus(params), DensityMatrix::maximally_mixed(2));
      const double closed = 1.0 - 2.0 * params.q - (1.0 - params.q) * binary_entropy(params.p);
      worst = std::max(worst, std::abs(direct - closed));
    }
  }
  const double mixed_tol = tol_override.value_or(1e-10);
  out.push_back(make_check("oracle", "mixed_state_formula", worst < mixed_tol, worst, mixed_tol));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 3;
    const int ref = 1 << n;
    Vector amps(ref << n);
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      amps(k) = Complex(re, im);
    }
    const CodeState code = CodeState::normalized(n, ref, amps);
    const double p = unit(rng);
    const double q = unit(rng);
    const ChannelParams params{p, q};
    worst = std::max(worst, std::abs(multiletter_ci(code, params, n) - brute_force_ci(code, params, n)));
  }
  out.push_back(make_check("oracle", "multiletter_vs_brute_force", worst < tol, worst, tol, "100 random codes"));

  worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 5;
    const double lambda = unit(rng);
    const double p = 0.5 * unit(rng);
    const double q = unit(rng);
    const ChannelParams params{p, q};
    const double block = multiletter_ci(repetition_code({n, lambda}), params, n);
    worst = std::max(worst, std::abs(block - repetition_ci(params, {n, lambda})));
  }
  out.push_back(make_check("oracle", "repetition_closed_form", worst < tol, worst, tol));
}

void thresholds_suite(std::vector<VerifyCheck>& out) {
  double worst = 0.0;
  const int q_steps = static_cast<int>(std::lround(0.5 / kContourStep));
  for (int i = 1; i < 25; ++i) {
    const double p = 0.02 * i;
    const double g = curve_g(p);
    double first = 0.5;
    for (int j = 0; j <= q_steps; ++j) {
      const double q = j * kContourStep;
      if (single_letter_ci({p, q}).value <= 0.0) {
        first = q;
        break;
      }
    }
    worst = std::max(worst, std::abs(first - g));
  }
  out.push_back(make_check("thresholds", "single_letter_zero_contour", worst <= kContourStep, worst, kContourStep));

  double min_below = std::numeric_limits<double>::infinity();
  double max_above = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 5; ++n) {
    for (double p : {0.05, 0.15, 0.25}) {
      const double g = curve_g(p);
      min_below = std::min(min_below, repetition_ci_opt({p, g - kRepetitionOffset}, n).value);
      max_above = std::max(max_above, repetition_ci_opt({p, g + kRepetitionOffset}, n).value);
    }
  }
  out.push_back(make_check("thresholds", "repetition_positive_below_g", min_below > 0.0, min_below, 0.0));
  out.push_back(make_check("thresholds", "repetition_nonpositive_above_g", max_above <= 0.0, max_above, 0.0));

  double max_below_j = 0.0;
  double min_above_j = std::numeric_limits<double>::infinity();
  for (double p : {0.05, 0.15, 0.25}) {
    const double j = curve_j(p);
    max_below_j = std::max(max_below_j, single_letter_ci({p, j - kJOffset}).z_star);
    min_above_j = std::min(min_above_j, single_letter_ci({p, j + kJOffset}).z_star);
  }
  out.push_back(make_check("thresholds", "mixed_optimal_below_j", max_below_j < kZStarFloor, max_below_j, kZStarFloor));
  out.push_back(make_check("thresholds", "biased_optimal_above_j", min_above_j > kZStarFloor, min_above_j, kZStarFloor));
}

void compci_suite(std::vector<VerifyCheck>& out, double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const ChannelParams params{unit(rng), unit(rng)};
    const double m = unit(rng);
    worst = std::max(worst, std::abs(comp_ci_x_state(params, m) - comp_ci_direct(params, m)));
  }
  out.push_back(make_check("compci", "closed_form_vs_direct", worst < tol, worst, tol));

  double min_value = std::numeric_limits<double>::infinity();
  std::string detail;
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      const ChannelParams params{0.05 * i, 0.05 * j};
      try {
        min_value = std::min(min_value, positivity_witness(params).ci_value);
      } catch (const UnderflowAtParams& e) {
        min_value = std::min(min_value, 0.0);
        detail = e.what();
      }
    }
  }
  out.push_back(make_check("compci", "witness_positive_on_grid", min_value > 0.0, min_value, 0.0, detail));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::string VerifyReport::to_json(const Provenance& provenance) const {
  nlohmann::ordered_json doc;
  doc["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : provenance) doc["provenance"][key] = value;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"suite", c.suite},
                             {"name", c.name},
                             {"passed", c.passed},
                             {"worst", c.worst},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}});
  }
  return doc.dump(2);
}

VerifyReport run_verify(std::string_view suite, std::optional<double> tol, std::uint64_t seed) {
  const bool all = suite == "all";
  if (!all && suite != "antideg" && suite != "oracle" && suite != "thresholds" && suite != "compci") {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  VerifyReport report;
  if (all || suite == "antideg") antideg_suite(report.checks, tol.value_or(1e-10));
  if (all || suite == "oracle") oracle_suite(report.checks, tol, seed);
  if (all || suite == "thresholds") thresholds_suite(report.checks);
  if (all || suite == "compci") compci_suite(report.checks, tol.value_or(1e-10), seed);
  return report;
}

}  // namespace dephrasure
