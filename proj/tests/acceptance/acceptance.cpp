// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is 0 only when all selected criteria pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <set>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "criteria.hpp"
#include "emodyn/common/format.hpp"
#include "support.hpp"

namespace emodyn::acceptance {

std::string Outcome::summary() const {
  std::string out;
  for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
  for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
  return out;
}

namespace {

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // wall-clock limit; 0 means none
  Outcome (*run)(const Settings&);
};

constexpr Criterion kCriteria[] = {
    {1, "table1-percent-change", 1.0, table1_percent_change},
    {2, "table2-identities", 1.0, table2_identities},
    {3, "mann-whitney-exactness", 120.0, mann_whitney_exactness},
    {4, "ellipse-coverage", 30.0, ellipse_coverage},
    {5, "band-calibration", 30.0, band_calibration},
    {6, "density-oracle", 0.0, density_oracle},
    {7, "preprocessing-properties", 0.0, preprocessing_properties},
    {8, "stance-harness", 0.0, stance_harness},
    {9, "throughput", 0.0, throughput},  // budget enforced inside, around the timed pass only
    {10, "golden-end-to-end", 0.0, golden_end_to_end},
};

}  // namespace
}  // namespace emodyn::acceptance

int main(int argc, char** argv) {
  using namespace emodyn::acceptance;
  CLI::App app{"Acceptance criteria"};
  std::set<int> only;
  bool update_golden = false;
  app.add_option("--only", only, "criterion numbers to run (default: all)");
  app.add_flag("--update-golden", update_golden, "rewrite the end-to-end golden manifest instead of comparing");
  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::err);

  emodyn::testing::TempDir scratch("emodyn-acceptance");
  const Settings settings{EMODYN_SOURCE_DIR, scratch.path(), update_golden};

  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run(settings);
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0) {
      outcome.expect(seconds < c.budget_seconds,
                     "took " + emodyn::format_fixed(seconds, 2) + " s, budget " + emodyn::format_fixed(c.budget_seconds, 0) + " s");
    }
    failed += outcome.passed() ? 0 : 1;
    std::printf("%s %2d %-26s %8.2fs  %s\n", outcome.passed() ? "PASS" : "FAIL", c.id, c.name, seconds,
                outcome.summary().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
