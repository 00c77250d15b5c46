#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace emodyn::stats {

enum class TestMethod { exact, normal_approx };

std::string_view to_string(TestMethod m) noexcept;

struct TestResult {
  double u_statistic = 0.0;  // U of the first sample
  double p_value = 1.0;      // two-sided
  double z = 0.0;            // standardized U (continuity-corrected); 0 for exact
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  TestMethod method = TestMethod::exact;
};

/// Largest per-sample size for which the exact permutation distribution is used.
inline constexpr std::size_t kExactLimit = 8;

/// Two-sided Mann-Whitney U test with midranks for ties. Uses the exact
/// permutation distribution of U (conditional on the observed ties) when both
/// samples have at most 8 values, otherwise the normal approximation with tie
/// and continuity corrections. Throws ParameterError on an empty sample.
TestResult mann_whitney(std::span<const double> a, std::span<const double> b);

}  // namespace emodyn::stats
