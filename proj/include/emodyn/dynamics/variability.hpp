#pragma once

#include <span>
#include <string_view>

#include "emodyn/dynamics/moments.hpp"

namespace emodyn::dynamics {

/// `sd` is the population standard deviation. `printed_variance` reproduces
/// the radical-less formula literally (population variance).
enum class EvFormula { sd, printed_variance };

EvFormula parse_ev_formula(std::string_view s);

/// Emotional variability of one dimension. Throws ParameterError when empty.
double emotional_variability(std::span<const double> values, EvFormula formula = EvFormula::sd);
double emotional_variability(const Moments1D& m, EvFormula formula = EvFormula::sd);

/// Mean of the per-dimension variabilities.
double ev_2d(std::span<const double> w, std::span<const double> c, EvFormula formula = EvFormula::sd);
double ev_2d(const Moments2D& m, EvFormula formula = EvFormula::sd);

}  // namespace emodyn::dynamics
