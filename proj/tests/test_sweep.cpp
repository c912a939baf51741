#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"

#include "dephrasure/channel.hpp"
#include "dephrasure/sweep.hpp"

using namespace dephrasure;
using doctest::Approx;

TEST_CASE("range parsing") {
  const Range r = parse_range("0.1:0.3:5");
  CHECK(r.lo == 0.1);
  CHECK(r.hi == 0.3);
  CHECK(r.steps == 5);
  const auto pts = r.points();
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 0.1);
  CHECK(pts.back() == 0.3);
  CHECK(pts[2] == Approx(0.2));
  CHECK_THROWS_AS(parse_range("0.1:0.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0.1:0.3:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0.3:0.1:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("0:1.5:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("a:0.3:5"), std::invalid_argument);
}

TEST_CASE("quantity parsing") {
  CHECK(parse_quantity("single_ci")->kind == Quantity::SingleCi);
  const auto gap = parse_quantity("repetition_gap(3)");
  REQUIRE(gap.has_value());
  CHECK(gap->kind == Quantity::RepetitionGap);
  CHECK(gap->n == 3);
  CHECK(to_string(*gap) == "repetition_gap(3)");
  CHECK(to_string(*parse_quantity("comp_witness")) == "comp_witness");
  CHECK_FALSE(parse_quantity("single_ci(2)").has_value());
  CHECK_FALSE(parse_quantity("repetition_gap(0)").has_value());
  CHECK_FALSE(parse_quantity("repetition_gap(x)").has_value());
  CHECK_FALSE(parse_quantity("nothing").has_value());
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("parallel_for covers every index and rethrows the first failure") {
  std::vector<int> seen(1000, 0);
  parallel_for(seen.size(), [&](std::size_t i) { seen[i] += 1; });
  for (int s : seen) CHECK(s == 1);
  CHECK_THROWS_WITH_AS(parallel_for(50,
                                    [](std::size_t i) {
                                      if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
                                    }),
                       "7", std::runtime_error);
  parallel_for(0, [](std::size_t) { throw std::logic_error("never"); });
}

TEST_CASE("regions table") {
  const Table t = regions_table(parse_range("0:0.5:3"), parse_range("0:1:5"));
  CHECK(t.columns == std::vector<std::string>{"p", "q", "region", "g", "j", "k"});
  REQUIRE(t.rows.size() == 15);
  for (int i = 0; i < 5; ++i) {
    CHECK(t.rows[static_cast<std::size_t>(i)][3] == Approx(0.5));
    CHECK(t.rows[static_cast<std::size_t>(i)][4] == Approx(0.5));
    CHECK(t.rows[static_cast<std::size_t>(i)][5] == Approx(0.5));
  }
  // p-major ordering.
  CHECK(t.rows[5][0] == 0.25);
  CHECK(t.rows[5][1] == 0.0);
  CHECK(t.rows[14][2] == static_cast<double>(Region::Antidegradable));
}

TEST_CASE("single_ci sweep zero contour tracks g") {
  SweepSpec spec;
  spec.p_range = parse_range("0.05:0.45:9");
  spec.q_range = parse_range("0:0.5:101");
  spec.quantity = *parse_quantity("single_ci");
  const Table t = sweep_table(spec);
  REQUIRE(t.rows.size() == 9 * 101);
  for (int i = 0; i < 9; ++i) {
    const double p = t.rows[static_cast<std::size_t>(101 * i)][0];
    double first = 1.0;
    for (int j = 0; j < 101; ++j) {
      const auto& row = t.rows[static_cast<std::size_t>(101 * i + j)];
      if (row[2] <= 0.0) {
        first = row[1];
        break;
      }
    }
    CHECK(std::abs(first - curve_g(p)) <= 5e-3);
  }
}

TEST_CASE("repetition gap sweep crosses the diagonal") {
  SweepSpec spec;
  spec.p_range = parse_range("0.118:0.1202:12");
  spec.diagonal = 3.0;
  spec.quantity = *parse_quantity("repetition_gap(2)");
  const Table t = sweep_table(spec);
  REQUIRE(t.rows.size() == 12);
  bool positive = false;
  for (const auto& row : t.rows) {
    CHECK(row[1] == Approx(3 * row[0]));
    if (row[2] > 0.0) positive = true;
  }
  CHECK(positive);
}

TEST_CASE("sweeps of every quantity produce full rows") {
  for (const char* name : {"single_ci", "repetition_rate(2)", "zdiag_rate(2)", "private_lb", "separation",
                           "regions", "antideg", "comp_witness"}) {
    SweepSpec spec;
    spec.p_range = parse_range("0.1:0.3:2");
    spec.q_range = parse_range("0.2:0.6:2");
    spec.quantity = *parse_quantity(name);
    const Table t = sweep_table(spec);
    CHECK(t.rows.size() == 4);
    for (const auto& row : t.rows) CHECK(row.size() == t.columns.size());
  }
}

TEST_CASE("diagonal table") {
  const Table t = diagonal_table(parse_range("0.118:0.1202:5"), 3.0, {"rep1", "rep2", "rep3", "rep4", "rep5"}, 0);
  CHECK(t.columns.size() == 7);
  for (const auto& row : t.rows) {
    for (int n = 2; n <= 5; ++n) CHECK(row[static_cast<std::size_t>(n + 1)] > 0.0);
    CHECK(row[2] < 1e-3);
  }
  const Table beyond = diagonal_table(parse_range("0.1216:0.124:4"), 3.0, {"rep1", "rep2", "rep3", "single"}, 0);
  for (const auto& row : beyond.rows) {
    for (std::size_t c = 2; c < row.size(); ++c) CHECK(row[c] <= 1e-6);
  }
  const Table sep = diagonal_table(parse_range("0.08:0.12:9"), 3.0, {"private", "single"}, 0);
  for (const auto& row : sep.rows) CHECK(row[2] > row[3]);
  CHECK_THROWS_AS(diagonal_table(parse_range("0.1:0.2:2"), 3.0, {"rep9"}, 0), std::invalid_argument);
  CHECK_THROWS_AS(diagonal_table(parse_range("0.1:0.2:2"), 0.0, {"rep1"}, 0), std::invalid_argument);
}

TEST_CASE("csv and json output") {
  Table t;
  t.columns = {"p", "q", "value"};
  t.rows = {{0.1, 0.2, 1.0 / 3.0}, {0.5, 0.25, std::nan("")}};
  t.provenance = {{"version", "x"}, {"seed", "4"}};
  std::ostringstream csv;
  write_table(t, Format::Csv, csv);
  CHECK(csv.str() == "# version: x\n# seed: 4\np,q,value\n0.1,0.2,0.333333333333\n0.5,0.25,nan\n");

  std::ostringstream js;
  write_table(t, Format::Json, js);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["provenance"]["seed"] == "4");
  CHECK(doc["records"].size() == 2);
  CHECK(doc["records"][0]["value"].get<double>() == Approx(1.0 / 3.0));
  CHECK(doc["records"][1]["value"].is_null());

  CHECK_THROWS_AS(write_table(t, Format::Csv, std::string("/nonexistent-dir/out.csv")), std::runtime_error);
}

TEST_CASE("sweep output is byte-stable") {
  SweepSpec spec;
  spec.p_range = parse_range("0:0.5:7");
  spec.q_range = parse_range("0:0.5:7");
  spec.quantity = *parse_quantity("repetition_gap(2)");
  std::ostringstream a;
  std::ostringstream b;
  write_table(sweep_table(spec), Format::Csv, a);
  write_table(sweep_table(spec), Format::Csv, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("verify suites") {
  const VerifyReport r = run_verify("compci", std::nullopt, 1);
  CHECK(r.passed());
  CHECK(r.checks.size() == 2);
  const auto doc = nlohmann::json::parse(r.to_json({{"version", kVersion}}));
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"][0]["suite"] == "compci");
  CHECK(run_verify("thresholds", std::nullopt, 1).passed());
  CHECK(run_verify("antideg", std::nullopt, 1).passed());
  CHECK_THROWS_AS(run_verify("bogus", std::nullopt, 1), std::invalid_argument);
}
