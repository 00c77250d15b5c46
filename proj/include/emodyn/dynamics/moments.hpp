#pragma once

#include <cstddef>
#include <span>

namespace emodyn::dynamics {

/// Count, mean and centred sum of squares of a 1-D sample.
struct Moments1D {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of (x - mean)^2

  double sample_variance() const noexcept { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
  double population_variance() const noexcept { return n > 0 ? m2 / static_cast<double>(n) : 0.0; }
};

struct Moments2D {
  std::size_t n = 0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double m_xx = 0.0;
  double m_yy = 0.0;
  double m_xy = 0.0;

  Moments1D x() const noexcept { return {n, mean_x, m_xx}; }
  Moments1D y() const noexcept { return {n, mean_y, m_yy}; }
};

/// Two-pass moments over materialised data (SIMD reductions).
Moments1D moments(std::span<const double> x);
Moments2D moments(std::span<const double> x, std::span<const double> y);

/// Streaming (Welford) moments for data that is never held in memory.
class MomentAccumulator2D {
 public:
  void add(double x, double y) noexcept;
  const Moments2D& moments() const noexcept { return m_; }

 private:
  Moments2D m_;
};

}  // namespace emodyn::dynamics
