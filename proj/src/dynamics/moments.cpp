#include "emodyn/dynamics/moments.hpp"

#include "emodyn/common/error.hpp"
#include "emodyn/simd/kernels.hpp"

namespace emodyn::dynamics {

Moments1D moments(std::span<const double> x) {
  Moments1D m;
  m.n = x.size();
  if (m.n == 0) return m;
  m.mean = simd::sum(x) / static_cast<double>(m.n);
  m.m2 = simd::sum_sq_dev(x, m.mean);
  return m;
}

Moments2D moments(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("coordinate spans differ in length");
  Moments2D m;
  m.n = x.size();
  if (m.n == 0) return m;
  const double n = static_cast<double>(m.n);
  m.mean_x = simd::sum(x) / n;
  m.mean_y = simd::sum(y) / n;
  m.m_xx = simd::sum_sq_dev(x, m.mean_x);
  m.m_yy = simd::sum_sq_dev(y, m.mean_y);
  m.m_xy = simd::sum_cross_dev(x, y, m.mean_x, m.mean_y);
  return m;
}

void MomentAccumulator2D::add(double x, double y) noexcept {
  ++m_.n;
  const double n = static_cast<double>(m_.n);
  const double dx = x - m_.mean_x;
  const double dy = y - m_.mean_y;
  m_.mean_x += dx / n;
  m_.mean_y += dy / n;
  m_.m_xx += dx * (x - m_.mean_x);
  m_.m_yy += dy * (y - m_.mean_y);
  m_.m_xy += dx * (y - m_.mean_y);
}

}  // namespace emodyn::dynamics
