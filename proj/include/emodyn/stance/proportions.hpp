#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "emodyn/common/time.hpp"
#include "emodyn/corpus/post.hpp"
#include "emodyn/stance/classify.hpp"

namespace emodyn::stance {

struct MonthlyStance {
  Month month;
  std::size_t n_sampled = 0;                 // posts sent for classification
  std::array<std::size_t, kLabelCount> counts{};  // labeled posts per class

  std::size_t labeled() const noexcept { return counts[0] + counts[1] + counts[2]; }
  /// Share among labeled posts; parse failures are excluded from the base.
  double fraction(StanceLabel l) const noexcept {
    return labeled() == 0 ? 0.0 : static_cast<double>(counts[index(l)]) / static_cast<double>(labeled());
  }
};

/// Joins records to sampled posts by id and tallies labels per month.
/// Throws DataError for a record whose post is not in the sample.
std::vector<MonthlyStance> monthly_proportions(std::span<const corpus::PostRecord> sample,
                                               std::span<const StanceRecord> records);

/// `month,n_sampled,favor_frac,against_frac,neutral_frac`; fractions are empty
/// for a month without any labeled post.
std::string proportions_csv(std::span<const MonthlyStance> rows);

}  // namespace emodyn::stance
