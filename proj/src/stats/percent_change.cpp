#include "emodyn/stats/percent_change.hpp"

#include "emodyn/common/error.hpp"

namespace emodyn::stats {

double percent_change(double before, double after) {
  if (before == 0.0) throw DataError("percent change undefined for a zero baseline");
  return (after - before) / before * 100.0;
}

}  // namespace emodyn::stats
