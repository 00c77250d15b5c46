#include "kernels_impl.hpp"

namespace emodyn::simd::detail {

namespace {

// Reductions accumulate in four interleaved lanes, folded as
// (l0 + l1) + (l2 + l3), then the tail is added in order. The AVX2 variant
// performs exactly these operations.

std::size_t first_non_ascii(const char* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<unsigned char>(data[i]) >= 0x80) return i;
  }
  return n;
}

void lower_alnum(const char* in, std::size_t n, char* lower_out, std::uint8_t* alnum_out) {
  for (std::size_t i = 0; i < n; ++i) {
    const char c = in[i];
    const bool upper = c >= 'A' && c <= 'Z';
    const bool lower = c >= 'a' && c <= 'z';
    const bool digit = c >= '0' && c <= '9';
    lower_out[i] = upper ? static_cast<char>(c | 0x20) : c;
    alnum_out[i] = (upper || lower || digit) ? 1 : 0;
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) l[k] = l[k] + a[i + k] * b[i + k];
  }
  double total = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

double sum(const double* x, std::size_t n) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) l[k] = l[k] + x[i + k];
  }
  double total = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) total = total + x[i];
  return total;
}

double sum_sq_dev(const double* x, std::size_t n, double center) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) {
      const double d = x[i + k] - center;
      l[k] = l[k] + d * d;
    }
  }
  double total = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    total = total + d * d;
  }
  return total;
}

double sum_cross_dev(const double* x, const double* y, std::size_t n, double cx, double cy) {
  double l[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int k = 0; k < 4; ++k) l[k] = l[k] + (x[i + k] - cx) * (y[i + k] - cy);
  }
  double total = (l[0] + l[1]) + (l[2] + l[3]);
  for (; i < n; ++i) total = total + (x[i] - cx) * (y[i] - cy);
  return total;
}

std::size_t count_in_ellipse(const double* x, const double* y, std::size_t n, const EllipseFrame& f) {
  std::size_t inside = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - f.center_x;
    const double dy = y[i] - f.center_y;
    const double u1 = dx * f.cos_t + dy * f.sin_t;
    const double u2 = dy * f.cos_t - dx * f.sin_t;
    const double q = u1 * u1 * f.inv_major + u2 * u2 * f.inv_minor;
    if (q <= 1.0) ++inside;
  }
  return inside;
}

}  // namespace

const Kernels kScalar{
    Isa::scalar, first_non_ascii, lower_alnum, dot, sum, sum_sq_dev, sum_cross_dev, count_in_ellipse,
};

}  // namespace emodyn::simd::detail
