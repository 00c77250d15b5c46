#pragma once

#include <cstddef>
#include <span>

#include "emodyn/dynamics/moments.hpp"

namespace emodyn::dynamics {

inline constexpr double kDefaultAlpha = 0.32;  // 68% confidence

/// 1-D home base: mean +/- t(1 - alpha/2, n - 1) * sqrt(s^2 / n), with the
/// sample variance s^2.
struct HomeBase1D {
  double mean = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double alpha = kDefaultAlpha;
  std::size_t n = 0;
  double variance = 0.0;
  double t_crit = 0.0;

  double width() const noexcept { return upper - lower; }
  bool contains(double v) const noexcept { return v >= lower && v <= upper; }
};

/// Throws DataError when n < 2; ParameterError for alpha outside (0, 1).
HomeBase1D home_base_1d(std::span<const double> values, double alpha = kDefaultAlpha);
HomeBase1D home_base_1d(const Moments1D& m, double alpha = kDefaultAlpha);

/// 2-D home base: confidence ellipse of the sample covariance of (w, c).
/// In the eigenbasis centred at the means a point is inside when
/// u1^2 / (psi * lambda1) + u2^2 / (psi * lambda2) <= 1, where psi is the
/// chi-square(2) critical value.
struct HomeBase2D {
  double mean_w = 0.0;
  double mean_c = 0.0;
  double lambda1 = 0.0;  // major eigenvalue
  double lambda2 = 0.0;
  double angle = 0.0;  // radians, major axis from the w axis, in (-pi/2, pi/2]
  double psi = 0.0;
  double alpha = kDefaultAlpha;
  std::size_t n = 0;

  /// Left-hand side of the boundary equation; 1 on the boundary.
  double membership(double w, double c) const noexcept;
  bool contains(double w, double c) const noexcept { return membership(w, c) <= 1.0; }
  double semi_major() const noexcept;
  double semi_minor() const noexcept;
  double area() const noexcept;
};

/// Throws DataError for fewer than 3 points or a degenerate (collinear)
/// covariance, which calls for a 1-D analysis instead.
HomeBase2D home_base_2d(std::span<const double> w, std::span<const double> c, double alpha = kDefaultAlpha);
HomeBase2D home_base_2d(const Moments2D& m, double alpha = kDefaultAlpha);

/// Number of points inside the ellipse (SIMD batch membership).
std::size_t count_inside(const HomeBase2D& hb, std::span<const double> w, std::span<const double> c);

}  // namespace emodyn::dynamics
