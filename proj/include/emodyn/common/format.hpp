#pragma once

#include <string>

namespace emodyn {

/// Shortest decimal text that round-trips to the same double. Used for every
/// number written to CSV/JSON so outputs are stable across runs.
std::string format_real(double value);

/// Fixed-point text with `digits` decimals (chart coordinates).
std::string format_fixed(double value, int digits);

}  // namespace emodyn
