#pragma once

// Data-parallel inner loops used by cleaning, tokenizing, cosine filtering and
// home-base fitting. Every kernel has a scalar reference; an AVX2 variant is
// picked at runtime when the CPU supports it. Floating-point reductions use
// the same 4-lane striping in both variants, so results are bit-identical.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace emodyn::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Ellipse in a rotated frame: q = (u1^2)*inv_major + (u2^2)*inv_minor, with
/// u1 = dx*cos + dy*sin and u2 = dy*cos - dx*sin. A point is inside when q <= 1.
struct EllipseFrame {
  double center_x = 0.0;
  double center_y = 0.0;
  double cos_t = 1.0;
  double sin_t = 0.0;
  double inv_major = 1.0;
  double inv_minor = 1.0;
};

struct Kernels {
  Isa isa;
  std::size_t (*first_non_ascii)(const char* data, std::size_t n);
  // lower_out[i] = ASCII-lowercased in[i]; alnum_out[i] = 1 for [A-Za-z0-9], else 0.
  void (*lower_alnum)(const char* in, std::size_t n, char* lower_out, std::uint8_t* alnum_out);
  double (*dot)(const double* a, const double* b, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*sum_sq_dev)(const double* x, std::size_t n, double center);
  double (*sum_cross_dev)(const double* x, const double* y, std::size_t n, double cx, double cy);
  std::size_t (*count_in_ellipse)(const double* x, const double* y, std::size_t n, const EllipseFrame& frame);
};

const Kernels& scalar_kernels() noexcept;

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels() noexcept;

/// Best available variant; `EMODYN_SIMD=scalar` in the environment forces the
/// reference path.
const Kernels& active() noexcept;

inline std::size_t first_non_ascii(std::string_view s) { return active().first_non_ascii(s.data(), s.size()); }

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }

inline double sum_sq_dev(std::span<const double> x, double center) {
  return active().sum_sq_dev(x.data(), x.size(), center);
}

inline double sum_cross_dev(std::span<const double> x, std::span<const double> y, double cx, double cy) {
  return active().sum_cross_dev(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size(), cx, cy);
}

inline std::size_t count_in_ellipse(std::span<const double> x, std::span<const double> y, const EllipseFrame& f) {
  return active().count_in_ellipse(x.data(), y.data(), x.size() < y.size() ? x.size() : y.size(), f);
}

}  // namespace emodyn::simd
