#pragma once

#include <span>
#include <string>
#include <vector>

#include "emodyn/dynamics/density.hpp"

namespace emodyn::dynamics {

/// Mean and sample SD of the monthly densities of one era.
struct EraStats {
  double mean = 0.0;
  double sd = 0.0;
  std::vector<double> values;  // chronological monthly densities
};

struct EraComparison {
  Category category = Category::anger;
  EraStats before;  // months starting before the split
  EraStats after;
};

/// Splits bins at the first month starting on or after `split` and summarises
/// each category per era. Throws DataError naming the era when it has fewer
/// than two bins.
std::vector<EraComparison> era_compare(std::span<const BinDensity> bins, Timestamp split);

EraStats era_stats(std::span<const double> values);

}  // namespace emodyn::dynamics
