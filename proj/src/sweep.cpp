#include "dephrasure/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "dephrasure/antideg.hpp"
#include "dephrasure/channel.hpp"
#include "dephrasure/code_search.hpp"
#include "dephrasure/compci.hpp"
#include "dephrasure/multiletter.hpp"
#include "dephrasure/private_info.hpp"

namespace dephrasure {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

struct QuantityName {
  Quantity kind;
  const char* name;
  bool takes_n;
};

constexpr QuantityName kQuantityNames[] = {
    {Quantity::SingleCi, "single_ci", false},
    {Quantity::RepetitionGap, "repetition_gap", true},
    {Quantity::RepetitionRate, "repetition_rate", true},
    {Quantity::ZdiagRate, "zdiag_rate", true},
    {Quantity::Chi3Rate, "chi3_rate", false},
    {Quantity::PrivateLb, "private_lb", false},
    {Quantity::Separation, "separation", false},
    {Quantity::Regions, "regions", false},
    {Quantity::Antideg, "antideg", false},
    {Quantity::CompWitness, "comp_witness", false},
};

const QuantityName& lookup(Quantity kind) {
  for (const auto& entry : kQuantityNames) {
    if (entry.kind == kind) return entry;
  }
  throw std::logic_error("unknown quantity");
}

std::vector<std::string> value_columns(const QuantitySpec& quantity) {
  switch (quantity.kind) {
    case Quantity::SingleCi: return {"value", "z_star"};
    case Quantity::RepetitionGap: return {"value", "rate", "single_ci", "lambda_star"};
    case Quantity::RepetitionRate: return {"value", "lambda_star"};
    case Quantity::ZdiagRate: return {"value"};
    case Quantity::Chi3Rate: return {"value"};
    case Quantity::PrivateLb: return {"value", "lambda_star"};
    case Quantity::Separation: return {"value", "private_lb", "single_ci"};
    case Quantity::Regions: return {"region", "g", "j", "k"};
    case Quantity::Antideg: return {"antidegradable", "x", "residual", "cp_min_eigenvalue"};
    case Quantity::CompWitness: return {"value", "epsilon"};
  }
  return {};
}

std::vector<double> region_values(double p, double q) {
  if (p > 0.5) return {kNaN, kNaN, kNaN, kNaN};
  const RegionCurves c = region_curves(p);
  return {static_cast<double>(classify({p, q})), c.g, c.j, c.k};
}

std::vector<double> evaluate(const QuantitySpec& quantity, double p, double q, std::uint64_t seed) {
  const ChannelParams params{p, q};
  const int n = quantity.n;
  switch (quantity.kind) {
    case Quantity::SingleCi: {
      const SingleLetterResult r = single_letter_ci(params);
      return {r.value, r.z_star};
    }
    case Quantity::RepetitionGap: {
      const WeightOptimum rep = repetition_ci_opt(params, n);
      const double single = single_letter_ci(params).value;
      return {rep.value / n - single, rep.value / n, single, rep.lambda_star};
    }
    case Quantity::RepetitionRate: {
      const WeightOptimum rep = repetition_ci_opt(params, n);
      return {rep.value / n, rep.lambda_star};
    }
    case Quantity::ZdiagRate:
      return {optimize_zdiag(params, n, seed).value / n};
    case Quantity::Chi3Rate:
      return {optimize_chi3(params, seed).value / 3.0};
    case Quantity::PrivateLb: {
      const PrivateBound b = private_lower_bound(params);
      return {b.value, b.lambda_star};
    }
    case Quantity::Separation: {
      const double priv = private_lower_bound(params).value;
      const double single = single_letter_ci(params).value;
      return {priv - single, priv, single};
    }
    case Quantity::Regions:
      return region_values(p, q);
    case Quantity::Antideg: {
      if (p > 0.5) return {kNaN, kNaN, kNaN, kNaN};
      const DegradingMapReport r = verify_antidegradable(params, 1e-10);
      return {r.antidegradable ? 1.0 : 0.0, r.x_param, r.composition_residual, r.cp_min_eigenvalue};
    }
    case Quantity::CompWitness: {
      if (p <= 0.0 || q <= 0.0 || p > 0.5 || q > 0.5) return {kNaN, kNaN};
      const WitnessResult w = positivity_witness(params);
      return {w.ci_value, w.epsilon};
    }
  }
  return {};
}

void format_cell(double value, std::string& out) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  out += buffer;
}

struct DiagonalCode {
  std::string name;
  std::function<double(const ChannelParams&)> rate;
};

DiagonalCode diagonal_code(const std::string& name, std::uint64_t seed) {
  if (name.size() == 4 && name.rfind("rep", 0) == 0 && name[3] >= '1' && name[3] <= '5') {
    const int n = name[3] - '0';
    return {name, [n](const ChannelParams& params) { return repetition_ci_opt(params, n).value / n; }};
  }
  if (name == "theta4") {
    return {name, [seed](const ChannelParams& params) { return optimize_zdiag(params, 4, seed).value / 4.0; }};
  }
  if (name == "chi3") {
    return {name, [seed](const ChannelParams& params) { return optimize_chi3(params, seed).value / 3.0; }};
  }
  if (name == "single") {
    return {name, [](const ChannelParams& params) { return single_letter_ci(params).value; }};
  }
  if (name == "private") {
    return {name, [](const ChannelParams& params) { return private_lower_bound(params).value; }};
  }
  throw std::invalid_argument("unknown code '" + name + "'");
}

}  // namespace

std::vector<double> Range::points() const {
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = (i == steps - 1) ? hi : lo + (hi - lo) * i / (steps - 1);
  }
  return out;
}

Range parse_range(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) throw std::invalid_argument("range must be lo:hi:steps");
  Range r;
  r.lo = parse_double(text.substr(0, first));
  r.hi = parse_double(text.substr(first + 1, second - first - 1));
  r.steps = parse_int(text.substr(second + 1));
  if (r.steps < 2) throw std::invalid_argument("range needs at least 2 steps");
  if (!(r.lo <= r.hi)) throw std::invalid_argument("range has lo > hi");
  if (r.lo < 0.0 || r.hi > 1.0) throw std::invalid_argument("range must lie in [0,1]");
  return r;
}

std::optional<QuantitySpec> parse_quantity(std::string_view text) {
  std::string_view name = text;
  std::optional<int> n;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') return std::nullopt;
    name = text.substr(0, open);
    try {
      n = parse_int(text.substr(open + 1, text.size() - open - 2));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  for (const auto& entry : kQuantityNames) {
    if (name != entry.name) continue;
    if (n && !entry.takes_n) return std::nullopt;
    QuantitySpec spec{entry.kind, n.value_or(2)};
    if (entry.takes_n && (spec.n < 1 || spec.n > kDefaultMaxUses)) return std::nullopt;
    return spec;
  }
  return std::nullopt;
}

std::string to_string(const QuantitySpec& quantity) {
  const QuantityName& entry = lookup(quantity.kind);
  std::string out = entry.name;
  if (entry.takes_n) out += "(" + std::to_string(quantity.n) + ")";
  return out;
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = count;

  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
}

Table sweep_table(const SweepSpec& spec) {
  std::vector<std::pair<double, double>> cells;
  for (double p : spec.p_range.points()) {
    if (spec.diagonal) {
      cells.emplace_back(p, *spec.diagonal * p);
    } else {
      for (double q : spec.q_range.points()) cells.emplace_back(p, q);
    }
  }
  for (const auto& [p, q] : cells) validate({p, q});

  Table table;
  table.columns = {"p", "q"};
  for (auto& c : value_columns(spec.quantity)) table.columns.push_back(std::move(c));
  table.rows.resize(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const auto [p, q] = cells[i];
    std::vector<double> row{p, q};
    for (double v : evaluate(spec.quantity, p, q, spec.seed)) row.push_back(v);
    table.rows[i] = std::move(row);
  });
  return table;
}

Table regions_table(const Range& p_range, const Range& q_range) {
  SweepSpec spec;
  spec.p_range = p_range;
  spec.q_range = q_range;
  spec.quantity = {Quantity::Regions, 2};
  return sweep_table(spec);
}

Table diagonal_table(const Range& p_range, double slope, const std::vector<std::string>& codes,
                     std::uint64_t seed) {
  if (!(slope > 0.0)) throw std::invalid_argument("diagonal slope must be positive");
  if (codes.empty()) throw std::invalid_argument("no codes requested");
  std::vector<DiagonalCode> columns;
  for (const auto& name : codes) columns.push_back(diagonal_code(name, seed));
  const std::vector<double> ps = p_range.points();
  for (double p : ps) validate({p, slope * p});

  Table table;
  table.columns = {"p", "q"};
  for (const auto& c : columns) table.columns.push_back(c.name);
  table.rows.assign(ps.size(), std::vector<double>(columns.size() + 2));
  parallel_for(ps.size() * columns.size(), [&](std::size_t idx) {
    const std::size_t row = idx / columns.size();
    const std::size_t col = idx % columns.size();
    const ChannelParams params{ps[row], slope * ps[row]};
    table.rows[row][0] = params.p;
    table.rows[row][1] = params.q;
    table.rows[row][col + 2] = columns[col].rate(params);
  });
  return table;
}

void write_table(const Table& table, Format format, std::ostream& out) {
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["provenance"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.provenance) doc["provenance"][key] = value;
    doc["columns"] = table.columns;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json record;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (std::isfinite(row[c])) {
          record[table.columns[c]] = row[c];
        } else {
          record[table.columns[c]] = nullptr;
        }
      }
      doc["records"].push_back(std::move(record));
    }
    out << doc.dump(2) << '\n';
    return;
  }
  std::string text;
  for (const auto& [key, value] : table.provenance) text += "# " + key + ": " + value + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) text += ',';
    text += table.columns[c];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      format_cell(row[c], text);
    }
    text += '\n';
  }
  out << text;
}

void write_table(const Table& table, Format format, const std::string& path) {
  if (path.empty() || path == "-") {
    write_table(table, format, std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_table(table, format, file);
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace dephrasure
