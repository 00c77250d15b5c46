#pragma once

#include "emodyn/simd/kernels.hpp"

namespace emodyn::simd::detail {

extern const Kernels kScalar;
#if defined(EMODYN_HAVE_AVX2_KERNELS)
extern const Kernels kAvx2;
#endif

}  // namespace emodyn::simd::detail
