#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace emodyn::simd {

std::string_view to_string(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const Kernels& scalar_kernels() noexcept { return detail::kScalar; }

const Kernels* avx2_kernels() noexcept {
#if defined(EMODYN_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active() noexcept {
  static const Kernels* const selected = [] {
    const char* forced = std::getenv("EMODYN_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &detail::kScalar;
    const Kernels* wide = avx2_kernels();
    return wide != nullptr ? wide : &detail::kScalar;
  }();
  return *selected;
}

}  // namespace emodyn::simd
