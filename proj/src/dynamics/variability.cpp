#include "emodyn/dynamics/variability.hpp"

#include <cmath>
#include <string>

#include "emodyn/common/error.hpp"

namespace emodyn::dynamics {

EvFormula parse_ev_formula(std::string_view s) {
  if (s == "sd") return EvFormula::sd;
  if (s == "printed-variance") return EvFormula::printed_variance;
  throw ConfigError("unknown ev-formula '" + std::string(s) + "' (expected sd or printed-variance)");
}

double emotional_variability(const Moments1D& m, EvFormula formula) {
  if (m.n == 0) throw ParameterError("emotional variability needs at least one value");
  const double var = m.population_variance();
  return formula == EvFormula::sd ? std::sqrt(var) : var;
}

double emotional_variability(std::span<const double> values, EvFormula formula) {
  return emotional_variability(moments(values), formula);
}

double ev_2d(const Moments2D& m, EvFormula formula) {
  return (emotional_variability(m.x(), formula) + emotional_variability(m.y(), formula)) / 2.0;
}

double ev_2d(std::span<const double> w, std::span<const double> c, EvFormula formula) {
  return ev_2d(moments(w, c), formula);
}

}  // namespace emodyn::dynamics
