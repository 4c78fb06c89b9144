#include <random>

#include "catloc/matrix.hpp"
#include "catloc/simd/fp_kernels.hpp"
#include "doctest.h"

using namespace catloc;
using namespace catloc::simd;

namespace {

const std::uint32_t kPrimes[] = {2, 3, 101, 65521, 1000000007u, 2147483647u};

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t len, std::uint32_t p) {
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

struct IsaGuard {
  Isa saved = active_isa();
  ~IsaGuard() { force_isa(saved); }
};

}  // namespace

TEST_SUITE("simd") {
  TEST_CASE("scalar kernels match 64-bit modular arithmetic") {
    std::mt19937_64 rng(1);
    for (auto p : kPrimes)
      for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u}) {
        auto dst = random_row(rng, len, p), src = random_row(rng, len, p);
        const std::uint32_t f = static_cast<std::uint32_t>(rng() % p);
        auto expect_sub = dst, expect_scale = dst;
        for (std::size_t j = 0; j < len; ++j) {
          const std::uint64_t prod = static_cast<std::uint64_t>(f) * src[j] % p;
          expect_sub[j] = static_cast<std::uint32_t>((dst[j] + p - prod) % p);
          expect_scale[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f) * dst[j] % p);
        }
        auto a = dst;
        row_submul_scalar(a.data(), src.data(), f, p, len);
        CHECK(a == expect_sub);
        auto b = dst;
        row_scale_scalar(b.data(), f, p, len);
        CHECK(b == expect_scale);
      }
  }

#if defined(__x86_64__) || defined(_M_X64)
  TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (!cpu_supports(Isa::kAvx2)) {
      MESSAGE("AVX2 unavailable on this CPU; skipped");
      return;
    }
    std::mt19937_64 rng(2);
    for (auto p : kPrimes) {
      if (p % 2 == 0) continue;  // vector kernels need an odd modulus
      for (std::size_t len = 0; len < 70; ++len) {
        auto dst = random_row(rng, len, p), src = random_row(rng, len, p);
        for (std::uint32_t f : {0u, 1u, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
          auto s = dst, v = dst;
          row_submul_scalar(s.data(), src.data(), f, p, len);
          row_submul_avx2(v.data(), src.data(), f, p, len);
          CHECK(s == v);
          s = dst, v = dst;
          row_scale_scalar(s.data(), f, p, len);
          row_scale_avx2(v.data(), f, p, len);
          CHECK(s == v);
        }
      }
    }
  }
#endif

  TEST_CASE("elimination gives identical results under both variants") {
    IsaGuard guard;
    std::mt19937_64 rng(3);
    for (auto p : {2u, 101u, 1000000007u}) {
      const Field F = Field::prime(p);
      for (int it = 0; it < 20; ++it) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 40;
        Matrix m(F, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar::from_int(F, rng() % 4 == 0 ? 0 : static_cast<long long>(rng() % p));
        force_isa(Isa::kScalar);
        const Echelon a = rref(m);
        force_isa(Isa::kAvx2);
        const Echelon b = rref(m);
        CHECK(a.reduced == b.reduced);
        CHECK(a.pivots == b.pivots);
      }
    }
  }

  TEST_CASE("dispatch reports a supported variant") {
    CHECK(cpu_supports(Isa::kScalar));
    CHECK(cpu_supports(active_isa()));
    CHECK(isa_name(Isa::kScalar) == "scalar");
  }
}
