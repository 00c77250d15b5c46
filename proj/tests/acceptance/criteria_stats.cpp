// Criterion 3: Mann-Whitney p-values against enumeration and Monte Carlo.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "emodyn/common/format.hpp"
#include "emodyn/stats/mann_whitney.hpp"

namespace emodyn::acceptance {

namespace {

constexpr int kSmallCases = 1000;
constexpr double kExactTolerance = 1e-9;
constexpr long kPermutations = 1'000'000;
constexpr double kApproxTolerance = 0.005;

// Doubled midrank of every pooled value, from direct counting.
std::vector<long> doubled_midranks(const std::vector<double>& pooled) {
  std::vector<long> out(pooled.size());
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    long less = 0, equal = 0;
    for (double v : pooled) less += v < pooled[i], equal += v == pooled[i];
    out[i] = 2 * less + equal + 1;
  }
  return out;
}

// Two-sided p by visiting every split of the pooled sample.
double enumerate_p(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = doubled_midranks(pooled);
  const long n1 = static_cast<long>(a.size()), n = static_cast<long>(pooled.size());
  const long center = n1 * (n + 1);  // 2 * E[R1]
  long observed = 0;
  for (long i = 0; i < n1; ++i) observed += ranks[static_cast<std::size_t>(i)];
  const long threshold = std::labs(observed - center);

  std::vector<bool> first(pooled.size(), false);
  std::fill(first.begin(), first.begin() + n1, true);
  long extreme = 0, total = 0;
  do {
    long r1 = 0;
    for (std::size_t i = 0; i < first.size(); ++i) r1 += first[i] ? ranks[i] : 0;
    ++total;
    extreme += std::labs(r1 - center) >= threshold;
  } while (std::prev_permutation(first.begin(), first.end()));
  return static_cast<double>(extreme) / static_cast<double>(total);
}

// Two-sided p estimated from random relabelings.
double monte_carlo_p(const std::vector<double>& a, const std::vector<double>& b, std::uint64_t seed) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  auto ranks = doubled_midranks(pooled);
  const std::size_t n1 = a.size(), n = pooled.size();
  const long center = static_cast<long>(n1 * (n + 1));
  long observed = 0;
  for (std::size_t i = 0; i < n1; ++i) observed += ranks[i];
  const long threshold = std::labs(observed - center);

  std::mt19937_64 rng(seed);
  long extreme = 0;
  for (long draw = 0; draw < kPermutations; ++draw) {
    long r1 = 0;
    for (std::size_t i = 0; i < n1; ++i) {  // partial Fisher-Yates
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(ranks[i], ranks[pick(rng)]);
      r1 += ranks[i];
    }
    extreme += std::labs(r1 - center) >= threshold;
  }
  return static_cast<double>(extreme) / static_cast<double>(kPermutations);
}

struct LargeFixture {
  std::size_t n1, n2;
  double shift;    // location shift of the second sample, in SDs
  double rounding; // values rounded to this grid (0 keeps them continuous)
};

// Sizes from the smallest approximated case up to the era sizes, with and
// without heavy ties.
constexpr LargeFixture kLarge[] = {
    {20, 20, 0.5, 0.0}, {20, 25, 0.8, 0.5}, {30, 12, 0.3, 0.0}, {36, 84, 0.4, 0.0}, {84, 36, 0.2, 0.25},
    {40, 40, 0.0, 1.0}, {25, 50, 0.6, 0.5}, {9, 60, 0.7, 0.0},  {50, 50, 0.3, 0.1}, {60, 20, 0.5, 1.0},
};

}  // namespace

Outcome mann_whitney_exactness(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> size(1, stats::kExactLimit);
  std::uniform_int_distribution<int> coarse(0, 6);
  std::normal_distribution<double> fine(0.0, 1.0);
  double worst = 0;
  int bad = 0;
  for (int c = 0; c < kSmallCases; ++c) {
    std::vector<double> a(size(rng)), b(size(rng));
    const bool ties = c % 2 == 0;  // half the cases draw from a 7-value grid
    for (auto& x : a) x = ties ? coarse(rng) : fine(rng);
    for (auto& x : b) x = ties ? coarse(rng) : fine(rng) + 0.5;
    const auto got = stats::mann_whitney(a, b);
    const double diff = std::abs(got.p_value - enumerate_p(a, b));
    worst = std::max(worst, diff);
    if (got.method != stats::TestMethod::exact || diff > kExactTolerance) ++bad;
  }
  o.expect(bad == 0, std::to_string(bad) + " of " + std::to_string(kSmallCases) + " small cases disagree");
  o.note("small: max |p - enumeration| " + format_real(worst));

  double worst_large = 0;
  std::uint64_t seed = 7;
  for (const auto& f : kLarge) {
    std::mt19937_64 gen(seed++);
    std::normal_distribution<double> base(0.0, 1.0);
    auto draw = [&](double shift) {
      double v = base(gen) + shift;
      return f.rounding > 0 ? std::round(v / f.rounding) * f.rounding : v;
    };
    std::vector<double> a(f.n1), b(f.n2);
    for (auto& x : a) x = draw(0.0);
    for (auto& x : b) x = draw(f.shift);
    const auto got = stats::mann_whitney(a, b);
    const double oracle = monte_carlo_p(a, b, seed * 977);
    const double diff = std::abs(got.p_value - oracle);
    worst_large = std::max(worst_large, diff);
    o.expect(got.method == stats::TestMethod::normal_approx && diff <= kApproxTolerance,
             std::to_string(f.n1) + "x" + std::to_string(f.n2) + " p " + format_fixed(got.p_value, 4) +
                 " vs permutation " + format_fixed(oracle, 4));
  }
  o.note("large: max |p - permutation| " + format_fixed(worst_large, 4));
  return o;
}

}  // namespace emodyn::acceptance
