#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace emodyn::dynamics {

enum class RollingMode { trailing, centered };

/// Moving average with the same length as the input. Trailing windows near the
/// start (and centered windows near either end) average what is available.
/// Throws ParameterError when window < 1.
std::vector<double> rolling_mean(std::span<const double> series, std::size_t window,
                                 RollingMode mode = RollingMode::trailing);

}  // namespace emodyn::dynamics
