// dephrasure_cli: sweeps, diagonal rate tables, verification suites and code
// optimization for the dephrasure channel.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dephrasure/code_search.hpp"
#include "dephrasure/sweep.hpp"

namespace {

using namespace dephrasure;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string joined_args(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) out += ' ';
    out += argv[i];
  }
  return out;
}

Provenance provenance(const std::string& command, const std::string& args, std::uint64_t seed) {
  return {{"version", kVersion}, {"command", command}, {"args", args}, {"seed", std::to_string(seed)}};
}

std::vector<std::string> split_codes(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text << '\n';
}

struct Options {
  std::string p_range = "0:0.5:201";
  std::string q_range = "0:0.5:201";
  std::string diagonal_p_range = "0.107:0.118:121";
  std::optional<double> slope;
  std::string quantity = "single_ci";
  std::optional<int> n;
  std::string codes = "rep1,rep2,rep3,rep4,rep5";
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  std::optional<double> tol;
  std::string suite = "all";
  double p = 0.11;
  double q = 0.33;
  int uses = 2;
  std::string parametrization = "full";
  PsoConfig pso;
};

Format require_format(const std::string& text) {
  const auto f = parse_format(text);
  if (!f) throw std::invalid_argument("unknown format '" + text + "'");
  return *f;
}

int run_sweep(const Options& o, const std::string& args) {
  SweepSpec spec;
  spec.p_range = parse_range(o.p_range);
  spec.q_range = parse_range(o.q_range);
  spec.diagonal = o.slope;
  const auto quantity = parse_quantity(o.quantity);
  if (!quantity) throw std::invalid_argument("unknown quantity '" + o.quantity + "'");
  spec.quantity = *quantity;
  if (o.n && o.quantity.find('(') == std::string::npos) spec.quantity.n = *o.n;
  spec.seed = o.seed;
  spec.format = require_format(o.format);
  Table table = sweep_table(spec);
  table.provenance = provenance("sweep", args, o.seed);
  table.provenance.emplace_back("quantity", to_string(spec.quantity));
  write_table(table, spec.format, o.out);
  return 0;
}

int run_diagonal(const Options& o, const std::string& args) {
  const Range range = parse_range(o.diagonal_p_range);
  Table table = diagonal_table(range, o.slope.value_or(3.0), split_codes(o.codes), o.seed);
  table.provenance = provenance("diagonal", args, o.seed);
  write_table(table, require_format(o.format), o.out);
  return 0;
}

int run_regions(const Options& o, const std::string& args) {
  Table table = regions_table(parse_range(o.p_range), parse_range(o.q_range));
  table.provenance = provenance("regions", args, o.seed);
  write_table(table, require_format(o.format), o.out);
  return 0;
}

int run_verify_cmd(const Options& o, const std::string& args) {
  const VerifyReport report = run_verify(o.suite, o.tol, o.seed);
  write_text(report.to_json(provenance("verify", args, o.seed)), o.out);
  for (const auto& c : report.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << '/' << c.name << " worst=" << c.worst << '\n';
  }
  return report.passed() ? 0 : kExitVerifyFailed;
}

int run_optimize(const Options& o, const std::string& args) {
  const auto parametrization = parse_parametrization(o.parametrization);
  if (!parametrization) throw std::invalid_argument("unknown parametrization '" + o.parametrization + "'");
  PsoConfig config = o.pso;
  config.seed = o.seed;
  const ChannelParams params{o.p, o.q};
  const CodeSearchResult r = optimize_code_ci(params, o.uses, *parametrization, config);

  nlohmann::ordered_json doc;
  doc["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : provenance("optimize", args, o.seed)) doc["provenance"][key] = value;
  doc["p"] = o.p;
  doc["q"] = o.q;
  doc["n"] = o.uses;
  doc["parametrization"] = to_string(*parametrization);
  doc["value"] = r.value;
  doc["rate"] = r.value / o.uses;
  doc["ref_dim"] = r.code.ref_dim();
  std::vector<double> re;
  std::vector<double> im;
  for (Eigen::Index i = 0; i < r.code.amplitudes().size(); ++i) {
    re.push_back(r.code.amplitudes()(i).real());
    im.push_back(r.code.amplitudes()(i).imag());
  }
  doc["amplitudes"] = {{"re", re}, {"im", im}};
  doc["pso"] = {{"n_particles", config.n_particles},
                {"c_inertia", config.c_inertia},
                {"c_self", config.c_self},
                {"c_social", config.c_social},
                {"max_iterations", config.max_iterations},
                {"stall_tolerance", config.stall_tolerance},
                {"stall_window", config.stall_window},
                {"per_dimension_draws", config.per_dimension_draws},
                {"literal_signs", config.literal_signs},
                {"iterations_run", r.pso.iterations_run},
                {"evaluations", r.pso.evaluations}};
  write_text(doc.dump(2), o.out);
  return 0;
}

void add_output(CLI::App* cmd, Options& o, bool with_format) {
  cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
  if (with_format) cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", o.seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dephrasure channel numerics"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity on a (p, q) grid");
  sweep->add_option("--p-range", o.p_range, "lo:hi:steps");
  sweep->add_option("--q-range", o.q_range, "lo:hi:steps");
  sweep->add_option("--diagonal-slope", o.slope, "Restrict to q = slope * p");
  sweep->add_option("--quantity", o.quantity,
                    "single_ci, repetition_gap(n), repetition_rate(n), zdiag_rate(n), chi3_rate, private_lb, "
                    "separation, regions, antideg, comp_witness");
  sweep->add_option("--n", o.n, "Channel uses for the n-dependent quantities");
  add_output(sweep, o, true);

  auto* diagonal = app.add_subcommand("diagonal", "Per-letter rates along q = slope * p");
  diagonal->add_option("--p-range", o.diagonal_p_range, "lo:hi:steps");
  diagonal->add_option("--diagonal-slope", o.slope, "Slope (default 3)");
  diagonal->add_option("--codes", o.codes, "Comma list of rep1..rep5, theta4, chi3, single, private");
  add_output(diagonal, o, true);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite,--suite", o.suite, "antideg, oracle, thresholds, compci or all")
      ->check(CLI::IsMember({"antideg", "oracle", "thresholds", "compci", "all"}));
  verify->add_option("--tol", o.tol, "Tolerance override");
  add_output(verify, o, false);

  auto* optimize = app.add_subcommand("optimize", "Particle swarm search over code states");
  optimize->add_option("--p", o.p, "Dephasing probability");
  optimize->add_option("--q", o.q, "Erasure probability");
  optimize->add_option("--n", o.uses, "Channel uses");
  optimize->add_option("--parametrization", o.parametrization, "full or chi3");
  optimize->add_option("--particles", o.pso.n_particles);
  optimize->add_option("--iterations", o.pso.max_iterations);
  optimize->add_option("--inertia", o.pso.c_inertia);
  optimize->add_option("--c-self", o.pso.c_self);
  optimize->add_option("--c-social", o.pso.c_social);
  optimize->add_flag("--per-dimension-draws", o.pso.per_dimension_draws);
  optimize->add_flag("--literal-signs", o.pso.literal_signs);
  add_output(optimize, o, false);

  auto* regions = app.add_subcommand("regions", "Region curves g, j, k and region index");
  regions->add_option("--p-range", o.p_range, "lo:hi:steps");
  regions->add_option("--q-range", o.q_range, "lo:hi:steps");
  add_output(regions, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string args = joined_args(argc, argv);
  try {
    if (sweep->parsed()) return run_sweep(o, args);
    if (diagonal->parsed()) return run_diagonal(o, args);
    if (verify->parsed()) return run_verify_cmd(o, args);
    if (optimize->parsed()) return run_optimize(o, args);
    if (regions->parsed()) return run_regions(o, args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
