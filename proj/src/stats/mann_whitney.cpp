#include "emodyn/stats/mann_whitney.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "emodyn/common/error.hpp"
#include "emodyn/stats/distributions.hpp"

namespace emodyn::stats {

namespace {

struct Ranked {
  std::vector<long> doubled_ranks;  // 2 * midrank, always an integer
  double tie_term = 0.0;            // sum over tie groups of t^3 - t
};

Ranked rank_pooled(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::pair<double, std::size_t>> pooled;
  pooled.reserve(n);
  for (std::size_t i = 0; i < a.size(); ++i) pooled.emplace_back(a[i], i);
  for (std::size_t i = 0; i < b.size(); ++i) pooled.emplace_back(b[i], a.size() + i);
  std::sort(pooled.begin(), pooled.end());

  Ranked r;
  r.doubled_ranks.assign(n, 0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[j + 1].first == pooled[i].first) ++j;
    // Positions i..j share midrank ((i+1) + (j+1)) / 2.
    const long doubled = static_cast<long>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) r.doubled_ranks[pooled[k].second] = doubled;
    const double t = static_cast<double>(j - i + 1);
    r.tie_term += t * t * t - t;
    i = j + 1;
  }
  return r;
}

// P(|U - mean| >= |u_obs - mean|) under all C(n, n1) equally likely splits of
// the pooled doubled ranks, counted with a subset-sum DP.
double exact_p(const std::vector<long>& doubled, std::size_t n1, std::size_t n2, long doubled_r1_obs) {
  const std::size_t n = n1 + n2;
  const long max_sum = std::accumulate(doubled.begin(), doubled.end(), 0L);
  // ways[k][s]: subsets of size k with doubled rank sum s.
  std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t item = 0; item < n; ++item) {
    const long r = doubled[item];
    for (std::size_t k = std::min(n1, item + 1); k >= 1; --k) {
      auto& dst = ways[k];
      const auto& src = ways[k - 1];
      for (long s = max_sum; s >= r; --s) dst[static_cast<std::size_t>(s)] += src[static_cast<std::size_t>(s - r)];
    }
  }
  // U = R1 - n1(n1+1)/2, so |U - n1 n2 / 2| compares as |2 R1 - n1(n + 1)|.
  const long center = static_cast<long>(n1 * (n + 1));
  const long observed = std::labs(doubled_r1_obs - center);
  double extreme = 0.0, total = 0.0;
  for (long s = 0; s <= max_sum; ++s) {
    const double w = ways[n1][static_cast<std::size_t>(s)];
    if (w == 0.0) continue;
    total += w;
    if (std::labs(s - center) >= observed) extreme += w;
  }
  return std::min(1.0, extreme / total);
}

}  // namespace

std::string_view to_string(TestMethod m) noexcept { return m == TestMethod::exact ? "exact" : "normal-approx"; }

TestResult mann_whitney(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ParameterError("Mann-Whitney U needs two non-empty samples");
  const std::size_t n1 = a.size(), n2 = b.size(), n = n1 + n2;
  const Ranked ranked = rank_pooled(a, b);
  long doubled_r1 = 0;
  for (std::size_t i = 0; i < n1; ++i) doubled_r1 += ranked.doubled_ranks[i];

  TestResult res;
  res.n1 = n1;
  res.n2 = n2;
  res.u_statistic = static_cast<double>(doubled_r1) / 2.0 - static_cast<double>(n1 * (n1 + 1)) / 2.0;

  if (n1 <= kExactLimit && n2 <= kExactLimit) {
    res.method = TestMethod::exact;
    res.p_value = exact_p(ranked.doubled_ranks, n1, n2, doubled_r1);
    return res;
  }

  res.method = TestMethod::normal_approx;
  const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2), dn = static_cast<double>(n);
  const double mean = dn1 * dn2 / 2.0;
  const double var = dn1 * dn2 / 12.0 * ((dn + 1.0) - ranked.tie_term / (dn * (dn - 1.0)));
  if (!(var > 0.0)) {
    res.p_value = 1.0;
    return res;
  }
  const double sd = std::sqrt(var);
  const double diff = res.u_statistic - mean;
  const double corrected = std::max(0.0, std::abs(diff) - 0.5);
  res.z = std::copysign(corrected / sd, diff);
  if (diff == 0.0) res.z = 0.0;
  res.p_value = std::min(1.0, 2.0 * normal_sf(corrected / sd));
  return res;
}

}  // namespace emodyn::stats
