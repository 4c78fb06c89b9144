#include "catloc/simd/fp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace catloc::simd {

namespace {

// Four Montgomery products a*b*2^-32 mod p, one per 64-bit lane; the low
// 32 bits of each lane hold the operands.
__attribute__((target("avx2"))) inline __m256i montmul4(__m256i a, __m256i b, __m256i p,
                                                       __m256i p_neg_inv) {
  __m256i t = _mm256_mul_epu32(a, b);
  __m256i m = _mm256_mul_epu32(t, p_neg_inv);
  __m256i u = _mm256_srli_epi64(_mm256_add_epi64(t, _mm256_mul_epu32(m, p)), 32);
  __m256i ge = _mm256_cmpgt_epi64(p, u);  // u < p
  return _mm256_sub_epi64(u, _mm256_andnot_si256(ge, p));
}

__attribute__((target("avx2"))) inline __m256i load4(const std::uint32_t* src) {
  return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

__attribute__((target("avx2"))) inline void store4(std::uint32_t* dst, __m256i v) {
  const __m256i pick = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
  __m256i packed = _mm256_permutevar8x32_epi32(v, pick);
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_castsi256_si128(packed));
}

}  // namespace

__attribute__((target("avx2"))) void row_submul_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                     std::uint32_t factor, std::uint32_t p,
                                                     std::size_t len) {
  if (p % 2 == 0) {
    row_submul_scalar(dst, src, factor, p, len);
    return;
  }
  const Montgomery mont(p);
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vinv = _mm256_set1_epi64x(mont.p_neg_inv);
  const __m256i vf = _mm256_set1_epi64x(mont.to_mont(factor % p));
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256i prod = montmul4(load4(src + j), vf, vp, vinv);
    __m256i d = load4(dst + j);
    __m256i diff = _mm256_sub_epi64(d, prod);
    __m256i neg = _mm256_cmpgt_epi64(prod, d);
    store4(dst + j, _mm256_add_epi64(diff, _mm256_and_si256(neg, vp)));
  }
  row_submul_scalar(dst + j, src + j, factor, p, len - j);
}

__attribute__((target("avx2"))) void row_scale_avx2(std::uint32_t* dst, std::uint32_t factor,
                                                    std::uint32_t p, std::size_t len) {
  if (p % 2 == 0) {
    row_scale_scalar(dst, factor, p, len);
    return;
  }
  const Montgomery mont(p);
  const __m256i vp = _mm256_set1_epi64x(p);
  const __m256i vinv = _mm256_set1_epi64x(mont.p_neg_inv);
  const __m256i vf = _mm256_set1_epi64x(mont.to_mont(factor % p));
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) store4(dst + j, montmul4(load4(dst + j), vf, vp, vinv));
  row_scale_scalar(dst + j, factor, p, len - j);
}

}  // namespace catloc::simd

#endif
