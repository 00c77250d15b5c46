#include "emodyn/stats/distributions.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "emodyn/common/error.hpp"

namespace emodyn::stats {

double t_critical(double alpha, std::size_t df) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (df == 0) throw ParameterError("t distribution needs at least one degree of freedom");
  const boost::math::students_t dist(static_cast<double>(df));
  return boost::math::quantile(boost::math::complement(dist, alpha / 2.0));
}

double chi2_critical(double alpha, std::size_t df) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (df == 0) throw ParameterError("chi-square distribution needs at least one degree of freedom");
  if (df == 2) return -2.0 * std::log(alpha);
  const boost::math::chi_squared dist(static_cast<double>(df));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace emodyn::stats
