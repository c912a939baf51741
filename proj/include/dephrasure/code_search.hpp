#pragma once

// Particle-swarm searches over code states for n uses of the channel.

#include <cstdint>
#include <optional>
#include <string_view>

#include "dephrasure/multiletter.hpp"
#include "dephrasure/pso.hpp"

namespace dephrasure {

enum class CodeParametrization {
  Full,  // every real and imaginary amplitude, reference dimension 2^n
  Chi3,  // the four complex coefficients of chi_3 (n = 3 only)
};

const char* to_string(CodeParametrization parametrization);
std::optional<CodeParametrization> parse_parametrization(std::string_view name);

struct CodeSearchResult {
  double value = 0.0;
  CodeState code;
  PsoResult pso;
};

/// Defaults used by the code searches: bounds [-1, 1] per real parameter.
PsoConfig default_code_pso_config(std::uint64_t seed);

/// Maximizes multiletter_ci over the chosen family. Raw parameter vectors are
/// normalized before evaluation; the all-zero vector scores -infinity.
/// Repetition-code and Z-diagonal optima are injected as warm starts.
/// Throws std::invalid_argument for unsupported (n, parametrization) pairs.
CodeSearchResult optimize_code_ci(const ChannelParams& params, int n,
                                  CodeParametrization parametrization, PsoConfig config);

Chi3Optimum optimize_chi3(const ChannelParams& params, std::uint64_t seed);
Chi3Optimum optimize_chi3(const ChannelParams& params, PsoConfig config);

}  // namespace dephrasure
