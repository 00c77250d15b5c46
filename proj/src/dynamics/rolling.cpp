#include "emodyn/dynamics/rolling.hpp"

#include <algorithm>

#include "emodyn/common/error.hpp"

namespace emodyn::dynamics {

std::vector<double> rolling_mean(std::span<const double> series, std::size_t window, RollingMode mode) {
  if (window < 1) throw ParameterError("rolling window must be at least 1");
  const std::size_t n = series.size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = 0, hi = 0;  // inclusive range
    if (mode == RollingMode::trailing) {
      lo = i + 1 >= window ? i + 1 - window : 0;
      hi = i;
    } else {
      const std::size_t before = (window - 1) / 2;
      const std::size_t after = window / 2;
      lo = i >= before ? i - before : 0;
      hi = std::min(n - 1, i + after);
    }
    // Incremental mean: a constant window yields exactly that constant.
    double mean = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) mean += (series[k] - mean) / static_cast<double>(k - lo + 1);
    out[i] = mean;
  }
  return out;
}

}  // namespace emodyn::dynamics
