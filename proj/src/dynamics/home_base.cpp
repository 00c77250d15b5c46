#include "emodyn/dynamics/home_base.hpp"

#include <cmath>
#include <numbers>

#include "emodyn/common/error.hpp"
#include "emodyn/simd/kernels.hpp"
#include "emodyn/stats/distributions.hpp"

namespace emodyn::dynamics {

namespace {
// Relative eigenvalue floor below which the ellipse is treated as a segment.
constexpr double kDegenerateRatio = 1e-12;

simd::EllipseFrame frame_of(const HomeBase2D& hb) {
  return simd::EllipseFrame{hb.mean_w, hb.mean_c, std::cos(hb.angle), std::sin(hb.angle),
                            1.0 / (hb.psi * hb.lambda1), 1.0 / (hb.psi * hb.lambda2)};
}
}  // namespace

HomeBase1D home_base_1d(const Moments1D& m, double alpha) {
  if (m.n < 2) throw DataError("home base needs at least 2 values");
  HomeBase1D hb;
  hb.mean = m.mean;
  hb.alpha = alpha;
  hb.n = m.n;
  hb.variance = m.sample_variance();
  hb.t_crit = stats::t_critical(alpha, m.n - 1);
  const double half = hb.t_crit * std::sqrt(hb.variance / static_cast<double>(m.n));
  hb.lower = hb.mean - half;
  hb.upper = hb.mean + half;
  return hb;
}

HomeBase1D home_base_1d(std::span<const double> values, double alpha) {
  return home_base_1d(moments(values), alpha);
}

HomeBase2D home_base_2d(const Moments2D& m, double alpha) {
  if (m.n < 3) throw DataError("2-D home base needs at least 3 points");
  const double dof = static_cast<double>(m.n - 1);
  const double a = m.m_xx / dof;
  const double d = m.m_yy / dof;
  const double b = m.m_xy / dof;
  const double half_trace = (a + d) / 2.0;
  const double radius = std::hypot((a - d) / 2.0, b);

  HomeBase2D hb;
  hb.mean_w = m.mean_x;
  hb.mean_c = m.mean_y;
  hb.lambda1 = half_trace + radius;
  // lambda1 * lambda2 = det avoids cancellation in the minor eigenvalue.
  hb.lambda2 = hb.lambda1 > 0.0 ? (a * d - b * b) / hb.lambda1 : 0.0;
  if (!(hb.lambda1 > 0.0) || !(hb.lambda2 > kDegenerateRatio * hb.lambda1)) {
    throw DataError("degenerate covariance (points are collinear or identical); use the 1-D home base");
  }
  hb.angle = 0.5 * std::atan2(2.0 * b, a - d);
  if (hb.angle <= -std::numbers::pi / 2.0) hb.angle += std::numbers::pi;
  hb.psi = stats::chi2_critical(alpha, 2);
  hb.alpha = alpha;
  hb.n = m.n;
  return hb;
}

HomeBase2D home_base_2d(std::span<const double> w, std::span<const double> c, double alpha) {
  return home_base_2d(moments(w, c), alpha);
}

double HomeBase2D::membership(double w, double c) const noexcept {
  const double dx = w - mean_w;
  const double dy = c - mean_c;
  const double ct = std::cos(angle), st = std::sin(angle);
  const double u1 = dx * ct + dy * st;
  const double u2 = dy * ct - dx * st;
  return u1 * u1 / (psi * lambda1) + u2 * u2 / (psi * lambda2);
}

double HomeBase2D::semi_major() const noexcept { return std::sqrt(psi * lambda1); }
double HomeBase2D::semi_minor() const noexcept { return std::sqrt(psi * lambda2); }
double HomeBase2D::area() const noexcept { return std::numbers::pi * semi_major() * semi_minor(); }

std::size_t count_inside(const HomeBase2D& hb, std::span<const double> w, std::span<const double> c) {
  return simd::count_in_ellipse(w, c, frame_of(hb));
}

}  // namespace emodyn::dynamics
