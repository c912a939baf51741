#include "dephrasure/code_search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dephrasure {

namespace {

constexpr int kFullMaxUses = 3;

Vector to_amplitudes(std::span<const double> raw) {
  Vector amps(static_cast<Eigen::Index>(raw.size() / 2));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) = Complex(raw[static_cast<std::size_t>(2 * i)], raw[static_cast<std::size_t>(2 * i + 1)]);
  }
  return amps;
}

std::vector<double> to_raw(const Vector& amps) {
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(2 * amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    raw.push_back(amps(i).real());
    raw.push_back(amps(i).imag());
  }
  return raw;
}

// Embeds a code with a smaller reference into reference dimension `ref_dim`.
std::vector<double> embed_raw(const CodeState& code, int ref_dim) {
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(ref_dim) * code.input_dim());
  amps.head(code.amplitudes().size()) = code.amplitudes();
  return to_raw(amps);
}

std::array<Complex, 4> chi3_coefficients(std::span<const double> raw) {
  return {Complex(raw[0], raw[1]), Complex(raw[2], raw[3]), Complex(raw[4], raw[5]),
          Complex(raw[6], raw[7])};
}

bool all_zero(std::span<const double> raw) {
  for (double x : raw) {
    if (x != 0.0) return false;
  }
  return true;
}

}  // namespace

const char* to_string(CodeParametrization parametrization) {
  switch (parametrization) {
    case CodeParametrization::Full: return "full";
    case CodeParametrization::Chi3: return "chi3";
  }
  return "unknown";
}

std::optional<CodeParametrization> parse_parametrization(std::string_view name) {
  if (name == "full") return CodeParametrization::Full;
  if (name == "chi3") return CodeParametrization::Chi3;
  return std::nullopt;
}

PsoConfig default_code_pso_config(std::uint64_t seed) {
  PsoConfig config;
  config.seed = seed;
  return config;
}

CodeSearchResult optimize_code_ci(const ChannelParams& params, int n,
                                  CodeParametrization parametrization, PsoConfig config) {
  validate(params);
  int dim = 0;
  int ref_dim = 0;
  std::function<CodeState(std::span<const double>)> decode;

  switch (parametrization) {
    case CodeParametrization::Full: {
      if (n < 1 || n > kFullMaxUses) {
        throw std::invalid_argument("optimize_code_ci: full parametrization supports n <= 3");
      }
      ref_dim = 1 << n;
      dim = 2 * ref_dim * (1 << n);
      decode = [n, ref_dim](std::span<const double> raw) {
        return CodeState::normalized(n, ref_dim, to_amplitudes(raw));
      };
      const WeightOptimum rep = repetition_ci_opt(params, n);
      config.initial_positions.push_back(embed_raw(repetition_code({n, rep.lambda_star}), ref_dim));
      const ZdiagOptimum zd = optimize_zdiag(params, n, config.seed, 8);
      config.initial_positions.push_back(to_raw(zdiag_code(zd.schmidt).amplitudes()));
      break;
    }
    case CodeParametrization::Chi3: {
      if (n != 3) throw std::invalid_argument("optimize_code_ci: chi3 parametrization requires n = 3");
      ref_dim = 4;
      dim = 8;
      decode = [](std::span<const double> raw) {
        const auto c = chi3_coefficients(raw);
        return chi3_code(c[0], c[1], c[2], c[3]);
      };
      // psi_1 = |0>, psi_2 = 0: the n = 2 uniform repetition code next to a pure qubit.
      config.initial_positions.push_back({1, 0, 0, 0, 0, 0, 0, 0});
      config.initial_positions.push_back({1, 0, 0, 0, 1, 0, 0, 0});
      // psi_1 = 0, psi_2 = |0>: the uniform n = 3 repetition code on |010>, |101>.
      config.initial_positions.push_back({0, 0, 0, 0, 1, 0, 0, 0});
      config.initial_positions.push_back({0.1, 0, 0.1, 0, 1, 0, 0, 0});
      break;
    }
  }

  const auto objective = [&](std::span<const double> raw) {
    if (all_zero(raw)) return std::numeric_limits<double>::infinity();
    return -multiletter_ci(decode(raw), params, n);
  };
  PsoResult pso = pso_minimize(objective, dim, config);
  CodeState code = decode(pso.best_position);
  const double value = -pso.best_value;
  return {value, std::move(code), std::move(pso)};
}

Chi3Optimum optimize_chi3(const ChannelParams& params, PsoConfig config) {
  const CodeSearchResult r = optimize_code_ci(params, 3, CodeParametrization::Chi3, std::move(config));
  auto c = chi3_coefficients(r.pso.best_position);
  // Coefficients of the normalized code: every coefficient appears twice.
  double norm2 = 0.0;
  for (const auto& x : c) norm2 += 2.0 * std::norm(x);
  for (auto& x : c) x /= std::sqrt(norm2);
  return {r.value, c};
}

Chi3Optimum optimize_chi3(const ChannelParams& params, std::uint64_t seed) {
  return optimize_chi3(params, default_code_pso_config(seed));
}

}  // namespace dephrasure
