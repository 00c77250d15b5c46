#pragma once

namespace emodyn::stats {

/// ((after - before) / before) * 100. Throws DataError when `before` is 0.
double percent_change(double before, double after);

}  // namespace emodyn::stats
