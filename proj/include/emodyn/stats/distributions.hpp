#pragma once

#include <cstddef>

namespace emodyn::stats {

/// Two-sided Student-t critical value: the (1 - alpha/2) quantile with `df`
/// degrees of freedom.
double t_critical(double alpha, std::size_t df);

/// Chi-square critical value: the (1 - alpha) quantile with `df` degrees of
/// freedom. For df = 2 this equals -2 ln(alpha).
double chi2_critical(double alpha, std::size_t df);

/// Upper tail of the standard normal, P(Z > z).
double normal_sf(double z);

}  // namespace emodyn::stats
