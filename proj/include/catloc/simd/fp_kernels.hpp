#pragma once

// Row kernels for Gaussian elimination over F_p.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The dispatching entry points pick the widest variant the CPU
// supports the first time they are called; CATLOC_SIMD=scalar in the
// environment pins the reference path. Both variants must produce identical
// output for every input (see tests/test_simd_kernels.cpp).

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace catloc::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// True if the running CPU can execute the given variant.
bool cpu_supports(Isa isa);

/// Variant used by the dispatching entry points.
Isa active_isa();

/// Force a variant (tests, benchmarks). Falls back to scalar if unsupported.
void force_isa(Isa isa);

/// Montgomery constants for an odd modulus p < 2^31.
struct Montgomery {
  std::uint32_t p = 0;
  std::uint32_t p_neg_inv = 0;  // -p^{-1} mod 2^32
  std::uint32_t r2 = 0;         // 2^64 mod p

  explicit Montgomery(std::uint32_t modulus);
  /// x * 2^32 mod p
  std::uint32_t to_mont(std::uint32_t x) const;
};

// dst[j] <- dst[j] - factor * src[j]  (mod p)
void row_submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                       std::uint32_t p, std::size_t len);
// dst[j] <- factor * dst[j]  (mod p)
void row_scale_scalar(std::uint32_t* dst, std::uint32_t factor, std::uint32_t p, std::size_t len);

#if defined(__x86_64__) || defined(_M_X64)
void row_submul_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                     std::uint32_t p, std::size_t len);
void row_scale_avx2(std::uint32_t* dst, std::uint32_t factor, std::uint32_t p, std::size_t len);
#endif

void row_submul(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor, std::uint32_t p,
                std::size_t len);
void row_scale(std::uint32_t* dst, std::uint32_t factor, std::uint32_t p, std::size_t len);

}  // namespace catloc::simd
