#include "catloc/simd/fp_kernels.hpp"

namespace catloc::simd {

Montgomery::Montgomery(std::uint32_t modulus) : p(modulus) {
  // Newton iteration for p^{-1} mod 2^32 (p odd).
  std::uint32_t inv = modulus;
  for (int i = 0; i < 5; ++i) inv *= 2u - modulus * inv;
  p_neg_inv = 0u - inv;
  std::uint64_t r = (std::uint64_t{1} << 32) % p;
  r2 = static_cast<std::uint32_t>((r * r) % p);
}

std::uint32_t Montgomery::to_mont(std::uint32_t x) const {
  return static_cast<std::uint32_t>(((std::uint64_t{x} << 32) % p));
}

void row_submul_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                       std::uint32_t p, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    auto prod = static_cast<std::uint32_t>((std::uint64_t{factor} * src[j]) % p);
    dst[j] = dst[j] >= prod ? dst[j] - prod : static_cast<std::uint32_t>(std::uint64_t{dst[j]} + p - prod);
  }
}

void row_scale_scalar(std::uint32_t* dst, std::uint32_t factor, std::uint32_t p, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j)
    dst[j] = static_cast<std::uint32_t>((std::uint64_t{factor} * dst[j]) % p);
}

}  // namespace catloc::simd
