#pragma once

// Grid sweeps, diagonal rate tables and verification suites behind the CLI.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dephrasure {

inline constexpr const char* kVersion = "0.1.0";

struct Range {
  double lo = 0.0;
  double hi = 0.5;
  int steps = 201;

  /// `steps` equally spaced points, both endpoints included.
  std::vector<double> points() const;
};

/// Parses "lo:hi:steps". Throws std::invalid_argument on malformed input,
/// steps < 2, lo > hi, or endpoints outside [0, 1].
Range parse_range(std::string_view text);

enum class Quantity {
  SingleCi,
  RepetitionGap,
  RepetitionRate,
  ZdiagRate,
  Chi3Rate,
  PrivateLb,
  Separation,
  Regions,
  Antideg,
  CompWitness,
};

struct QuantitySpec {
  Quantity kind = Quantity::SingleCi;
  int n = 2;  // used by the repetition and zdiag quantities
};

/// Accepts "name" or "name(n)", e.g. "repetition_gap(2)".
std::optional<QuantitySpec> parse_quantity(std::string_view text);
std::string to_string(const QuantitySpec& quantity);

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view text);

struct SweepSpec {
  Range p_range{0.0, 0.5, 201};
  Range q_range{0.0, 0.5, 201};
  std::optional<double> diagonal;  // q = slope * p; q_range is ignored
  QuantitySpec quantity;
  std::uint64_t seed = 0;
  std::string output_path;
  Format format = Format::Csv;
};

using Provenance = std::vector<std::pair<std::string, std::string>>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  Provenance provenance;
};

/// Rows in p-major order.
Table sweep_table(const SweepSpec& spec);

/// Per-letter rates along q = slope * p. Codes: rep1..rep5, theta4, chi3,
/// single, private. Throws std::invalid_argument for unknown codes.
Table diagonal_table(const Range& p_range, double slope, const std::vector<std::string>& codes,
                     std::uint64_t seed);

/// g, j, k and the region index (0 mixed-optimal, 1 fish, 2 no coherent
/// information, 3 antidegradable) on the grid.
Table regions_table(const Range& p_range, const Range& q_range);

/// CSV: provenance as '#' lines, one header line, '%.12g' cells.
void write_table(const Table& table, Format format, std::ostream& out);
/// Writes to `path`, or stdout when empty. Throws std::runtime_error if the
/// file cannot be opened.
void write_table(const Table& table, Format format, const std::string& path);

/// Calls body(i) for i in [0, count) on a thread pool. Results must be
/// stored by index; the first exception (lowest index) is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

struct VerifyCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst residual or margin observed
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
  /// JSON text with per-check records.
  std::string to_json(const Provenance& provenance) const;
};

/// Suites: antideg, oracle, thresholds, compci, all. `tol` overrides the
/// default tolerance of each check when set. Throws std::invalid_argument for
/// an unknown suite.
VerifyReport run_verify(std::string_view suite, std::optional<double> tol, std::uint64_t seed);

}  // namespace dephrasure
