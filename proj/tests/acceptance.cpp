// Acceptance runner: one PASS/FAIL line per criterion.
#include <cmath>
#include <cstdio>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dephrasure/channel.hpp"
#include "dephrasure/code_search.hpp"
#include "dephrasure/compci.hpp"
#include "dephrasure/multiletter.hpp"
#include "dephrasure/private_info.hpp"
#include "dephrasure/pso.hpp"
#include "dephrasure/sweep.hpp"

using namespace dephrasure;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Runs the named checks from a verify suite and folds them into one line.
void from_suite(int id, const char* title, const VerifyReport& suite, const std::vector<std::string>& names) {
  bool ok = true;
  std::string detail;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& c : suite.checks) {
      if (c.name != name) continue;
      found = true;
      ok = ok && c.passed;
      if (!detail.empty()) detail += "; ";
      detail += name + " worst=" + fmt("%.3g", c.worst);
    }
    if (!found) {
      ok = false;
      detail += name + " missing";
    }
  }
  report(id, title, ok, detail);
}

void run(int id, const char* title, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  run(1, "single-letter mixed-state formula", [] {
    from_suite(1, "single-letter mixed-state formula", run_verify("oracle", std::nullopt, 1),
               {"mixed_state_formula"});
  });
  run(2, "zero contour follows g", [] {
    from_suite(2, "zero contour follows g", run_verify("thresholds", std::nullopt, 1),
               {"single_letter_zero_contour"});
  });

  run(3, "superadditivity at n=2 on q=3p", [] {
    double best_gap = -1.0;
    double best_p = 0.0;
    double single_at_best = 0.0;
    const Range r{0.118, 0.1202, 45};
    for (double p : r.points()) {
      const ChannelParams c{p, 3 * p};
      const double gap = 0.5 * repetition_ci_opt(c, 2).value - single_letter_ci(c).value;
      if (gap > best_gap) {
        best_gap = gap;
        best_p = p;
        single_at_best = single_letter_ci(c).value;
      }
    }
    report(3, "superadditivity at n=2 on q=3p", best_gap > 0.0 && single_at_best < 1e-3,
           "max gap " + fmt("%.6g", best_gap) + " at p=" + fmt("%.6g", best_p) + ", single " +
               fmt("%.3g", single_at_best));
  });

  run(4, "repetition thresholds coincide with g", [] {
    from_suite(4, "repetition thresholds coincide with g", run_verify("thresholds", std::nullopt, 1),
               {"repetition_positive_below_g", "repetition_nonpositive_above_g"});
  });
  run(5, "multiletter oracle equivalence", [] {
    from_suite(5, "multiletter oracle equivalence", run_verify("oracle", std::nullopt, 1),
               {"multiletter_vs_brute_force"});
  });
  run(6, "antidegradability above k", [] {
    from_suite(6, "antidegradability above k", run_verify("antideg", std::nullopt, 1),
               {"composition_residual", "choi_min_eigenvalue", "single_letter_nonpositive"});
  });

  run(7, "private/coherent separation", [] {
    double min_sep = 1.0;
    for (double p : {0.09, 0.10, 0.11, 0.12}) {
      const ChannelParams c{p, 3 * p};
      min_sep = std::min(min_sep, private_lower_bound(c).value - single_letter_ci(c).value);
    }
    const double zero = private_zero_on_diagonal(3.0, 0.1, 0.13);
    const bool ok = min_sep > 0.0 && std::abs(zero - 0.12145) <= 5e-4;
    report(7, "private/coherent separation", ok,
           "min separation " + fmt("%.6g", min_sep) + ", zero at p=" + fmt("%.8g", zero));
  });

  run(8, "complementary positivity witness", [] {
    double min_value = 1.0;
    for (int i = 1; i <= 10; ++i) {
      for (int j = 1; j <= 10; ++j) {
        min_value = std::min(min_value, positivity_witness({0.05 * i, 0.05 * j}).ci_value);
      }
    }
    report(8, "complementary positivity witness", min_value > 0.0, "min value " + fmt("%.3g", min_value));
  });

  run(9, "pso sanity and code recovery", [] {
    PsoConfig sc;
    sc.bounds = {{-5.0, 5.0}};
    sc.seed = 1;
    const double sphere = pso_minimize(
                              [](std::span<const double> x) {
                                double s = 0.0;
                                for (double v : x) s += v * v;
                                return s;
                              },
                              4, sc)
                              .best_value;

    const ChannelParams d{0.11, 0.33};
    const double two = optimize_code_ci(d, 2, CodeParametrization::Full, default_code_pso_config(1)).value;
    const double rep2 = repetition_ci_opt(d, 2).value;

    bool chi_ok = true;
    std::string chi_detail;
    for (double p : {0.110, 0.114}) {
      const ChannelParams c{p, 3 * p};
      const double chi = optimize_chi3(c, 1).value / 3;
      const double rep3 = repetition_ci_opt(c, 3).value / 3;
      chi_ok = chi_ok && chi >= rep3;
      chi_detail += ", chi3/3-rep3/3 at " + fmt("%.3f", p) + " = " + fmt("%.3g", chi - rep3);
    }
    const bool ok = sphere < 1e-6 && two >= rep2 - 1e-6 && chi_ok;
    report(9, "pso sanity and code recovery", ok,
           "sphere " + fmt("%.3g", sphere) + ", n=2 margin " + fmt("%.3g", two - rep2) + chi_detail);
  });

  return failures == 0 ? 0 : 1;
}
