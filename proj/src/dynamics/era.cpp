#include "emodyn/dynamics/era.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "emodyn/common/error.hpp"
#include "emodyn/dynamics/moments.hpp"

namespace emodyn::dynamics {

EraStats era_stats(std::span<const double> values) {
  const Moments1D m = moments(values);
  EraStats s;
  s.mean = m.mean;
  s.sd = std::sqrt(m.sample_variance());
  s.values.assign(values.begin(), values.end());
  return s;
}

std::vector<EraComparison> era_compare(std::span<const BinDensity> bins, Timestamp split) {
  std::map<Category, std::vector<const BinDensity*>> ordered;
  for (const auto& b : bins) ordered[b.category].push_back(&b);

  std::vector<EraComparison> out;
  for (auto& [category, list] : ordered) {
    std::sort(list.begin(), list.end(), [](const BinDensity* x, const BinDensity* y) { return x->bin < y->bin; });
    std::vector<double> before, after;
    for (const BinDensity* b : list) (month_start(b->bin) < split ? before : after).push_back(b->density());
    const auto name = lexicon::to_string(category);
    if (before.size() < 2) {
      throw DataError(fmt::format("era 'pre' (before {}) has {} monthly bin(s) for {}; need at least 2", format_date(split),
                                  before.size(), name));
    }
    if (after.size() < 2) {
      throw DataError(fmt::format("era 'covid' (from {}) has {} monthly bin(s) for {}; need at least 2", format_date(split),
                                  after.size(), name));
    }
    out.push_back(EraComparison{category, era_stats(before), era_stats(after)});
  }
  return out;
}

}  // namespace emodyn::dynamics
