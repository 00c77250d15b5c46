#include <immintrin.h>

#include "kernels_impl.hpp"

namespace emodyn::simd::detail {

namespace {

double fold(__m256d acc) {
  alignas(32) double l[4];
  _mm256_store_pd(l, acc);
  return (l[0] + l[1]) + (l[2] + l[3]);
}

std::size_t first_non_ascii(const char* data, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(v));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i) {
    if (static_cast<unsigned char>(data[i]) >= 0x80) return i;
  }
  return n;
}

inline __m256i in_range(__m256i v, char lo, char hi) {
  // Signed compare; bytes >= 0x80 are negative and never match an ASCII range.
  return _mm256_and_si256(_mm256_cmpgt_epi8(v, _mm256_set1_epi8(static_cast<char>(lo - 1))),
                          _mm256_cmpgt_epi8(_mm256_set1_epi8(static_cast<char>(hi + 1)), v));
}

void lower_alnum(const char* in, std::size_t n, char* lower_out, std::uint8_t* alnum_out) {
  const __m256i case_bit = _mm256_set1_epi8(0x20);
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i));
    const __m256i upper = in_range(v, 'A', 'Z');
    const __m256i lower = in_range(v, 'a', 'z');
    const __m256i digit = in_range(v, '0', '9');
    const __m256i lowered = _mm256_or_si256(v, _mm256_and_si256(upper, case_bit));
    const __m256i alnum = _mm256_and_si256(_mm256_or_si256(_mm256_or_si256(upper, lower), digit), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lower_out + i), lowered);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(alnum_out + i), alnum);
  }
  kScalar.lower_alnum(in + i, n - i, lower_out + i, alnum_out + i);
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double total = fold(acc);
  for (; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

double sum(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double total = fold(acc);
  for (; i < n; ++i) total = total + x[i];
  return total;
}

double sum_sq_dev(const double* x, std::size_t n, double center) {
  const __m256d c = _mm256_set1_pd(center);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), c);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double total = fold(acc);
  for (; i < n; ++i) {
    const double d = x[i] - center;
    total = total + d * d;
  }
  return total;
}

double sum_cross_dev(const double* x, const double* y, std::size_t n, double cx, double cy) {
  const __m256d vx = _mm256_set1_pd(cx);
  const __m256d vy = _mm256_set1_pd(cy);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vy);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(dx, dy));
  }
  double total = fold(acc);
  for (; i < n; ++i) total = total + (x[i] - cx) * (y[i] - cy);
  return total;
}

std::size_t count_in_ellipse(const double* x, const double* y, std::size_t n, const EllipseFrame& f) {
  const __m256d cx = _mm256_set1_pd(f.center_x);
  const __m256d cy = _mm256_set1_pd(f.center_y);
  const __m256d ct = _mm256_set1_pd(f.cos_t);
  const __m256d st = _mm256_set1_pd(f.sin_t);
  const __m256d i1 = _mm256_set1_pd(f.inv_major);
  const __m256d i2 = _mm256_set1_pd(f.inv_minor);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t inside = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), cx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), cy);
    const __m256d u1 = _mm256_add_pd(_mm256_mul_pd(dx, ct), _mm256_mul_pd(dy, st));
    const __m256d u2 = _mm256_sub_pd(_mm256_mul_pd(dy, ct), _mm256_mul_pd(dx, st));
    const __m256d q = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(u1, u1), i1), _mm256_mul_pd(_mm256_mul_pd(u2, u2), i2));
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(q, one, _CMP_LE_OQ));
    inside += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  return inside + kScalar.count_in_ellipse(x + i, y + i, n - i, f);
}

}  // namespace

const Kernels kAvx2{
    Isa::avx2, first_non_ascii, lower_alnum, dot, sum, sum_sq_dev, sum_cross_dev, count_in_ellipse,
};

}  // namespace emodyn::simd::detail
