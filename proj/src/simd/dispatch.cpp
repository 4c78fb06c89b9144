#include <atomic>
#include <cstdlib>
#include <cstring>

#include "catloc/simd/fp_kernels.hpp"

namespace catloc::simd {

namespace {

Isa detect() {
  const char* env = std::getenv("CATLOC_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::kScalar;
  return cpu_supports(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  current().store(cpu_supports(isa) ? isa : Isa::kScalar, std::memory_order_relaxed);
}

// Short rows are cheaper on the scalar path than paying for the lane setup. The
// vector kernels use Montgomery reduction and need an odd modulus.
constexpr std::size_t kMinVectorLen = 8;

void row_submul(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t len) {
#if defined(__x86_64__) || defined(_M_X64)
  if (len >= kMinVectorLen && (p & 1u) && active_isa() == Isa::kAvx2) {
    row_submul_avx2(dst, src, factor, p, len);
    return;
  }
#endif
  row_submul_scalar(dst, src, factor, p, len);
}

void row_scale(std::uint32_t* dst, std::uint32_t factor, std::uint32_t p, std::size_t len) {
#if defined(__x86_64__) || defined(_M_X64)
  if (len >= kMinVectorLen && (p & 1u) && active_isa() == Isa::kAvx2) {
    row_scale_avx2(dst, factor, p, len);
    return;
  }
#endif
  row_scale_scalar(dst, factor, p, len);
}

}  // namespace catloc::simd
