#include <numeric>
#include <random>

#include "catloc/matrix.hpp"
#include "doctest.h"

using namespace catloc;

namespace {

struct Frac {
  long long n, d;
};

Frac norm(long long n, long long d) {
  if (d < 0) n = -n, d = -d;
  long long g = std::gcd(n < 0 ? -n : n, d);
  return {n / g, d / g};
}

Scalar q(long long n, long long d) { return Scalar::from_int(Field::rationals(), n) / Scalar::from_int(Field::rationals(), d); }

std::string frac_text(Frac f) { return f.d == 1 ? std::to_string(f.n) : std::to_string(f.n) + "/" + std::to_string(f.d); }

/// Rank over F_p by counting the column span: |span| = p^rank.
std::size_t brute_rank(const std::vector<std::vector<unsigned>>& cols, unsigned p, std::size_t rows) {
  std::vector<std::vector<unsigned>> span = {std::vector<unsigned>(rows, 0)};
  for (const auto& c : cols) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& v : span)
      for (unsigned t = 0; t < p; ++t) {
        std::vector<unsigned> w(rows);
        for (std::size_t r = 0; r < rows; ++r) w[r] = (v[r] + t * c[r]) % p;
        next.push_back(w);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = next;
  }
  std::size_t r = 0;
  for (std::size_t s = span.size(); s > 1; s /= p) ++r;
  return r;
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("rational arithmetic matches hand-reduced fractions") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-30, 30);
    for (int it = 0; it < 500; ++it) {
      long long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
      if (b == 0 || d == 0) continue;
      CHECK((q(a, b) + q(c, d)).to_string() == frac_text(norm(a * d + b * c, b * d)));
      CHECK((q(a, b) * q(c, d)).to_string() == frac_text(norm(a * c, b * d)));
      if (c != 0) CHECK((q(a, b) / q(c, d)).to_string() == frac_text(norm(a * d, b * c)));
    }
  }

  TEST_CASE("prime field arithmetic matches modular integers") {
    const std::uint32_t p = 101;
    const Field F = Field::prime(p);
    for (long long a = -3; a < 104; a += 5)
      for (long long b = 1; b < 101; b += 7) {
        const long long ma = ((a % 101) + 101) % 101;
        CHECK((Scalar::from_int(F, a) * Scalar::from_int(F, b)).residue() == (ma * b) % 101);
        CHECK((Scalar::from_int(F, a) - Scalar::from_int(F, b)).residue() == ((ma - b) % 101 + 101) % 101);
        const auto inv = Scalar::from_int(F, b).inverse().residue();
        CHECK((inv * b) % p == 1);
      }
  }

  TEST_CASE("parse and print") {
    CHECK(Scalar::parse(Field::rationals(), "6/4").to_string() == "3/2");
    CHECK(Scalar::parse(Field::rationals(), "-7").to_string() == "-7");
    CHECK(Scalar::parse(Field::prime(7), "1/2").residue() == 4);
    CHECK_THROWS(Scalar::parse(Field::rationals(), "x"));
    CHECK_THROWS(Scalar::parse(Field::prime(7), "1/7"));
    CHECK_THROWS(Field::prime(12));
  }

  TEST_CASE("mixing fields is rejected") {
    CHECK_THROWS_AS(Scalar::one(Field::prime(5)) + Scalar::one(Field::prime(7)), FieldMismatch);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("rank and kernel against span enumeration over F_5") {
    const unsigned p = 5;
    const Field F = Field::prime(p);
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
      const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
      Matrix m(F, rows, cols);
      std::vector<std::vector<unsigned>> colv(cols, std::vector<unsigned>(rows));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          unsigned v = (rng() % 3 == 0) ? 0 : rng() % p;
          colv[c][r] = v;
          m(r, c) = Scalar::from_int(F, v);
        }
      const std::size_t rk = brute_rank(colv, p, rows);
      CHECK(rank(m) == rk);
      const auto ker = kernel_basis(m);
      CHECK(ker.size() == cols - rk);
      for (const auto& v : ker) CHECK(is_zero_vector(m * v));
      CHECK(column_space_basis(m).size() == rk);
    }
  }

  TEST_CASE("inverse and solve over Q") {
    const Field Q = Field::rationals();
    Matrix m = Matrix::from_rows(Q, 3, {{q(2, 1), q(1, 1), q(0, 1)}, {q(1, 1), q(3, 1), q(1, 1)}, {q(0, 1), q(1, 1), q(4, 1)}});
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(m * *inv == Matrix::identity(Q, 3));
    // det = 2*11 - 1*4 = 18; (inv)(0,0) = (3*4 - 1)/18.
    CHECK((*inv)(0, 0).to_string() == "11/18");
    Vector b = {q(1, 1), q(2, 1), q(3, 1)};
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
    Matrix sing = Matrix::from_rows(Q, 2, {{q(1, 1), q(2, 1)}, {q(2, 1), q(4, 1)}});
    CHECK_FALSE(inverse(sing));
    CHECK_FALSE(solve(sing, Vector{q(1, 1), q(0, 1)}));
  }

  TEST_CASE("subspace quotient coordinates round-trip") {
    const Field F = Field::prime(101);
    auto s = [&](long long v) { return Scalar::from_int(F, v); };
    Subspace U(F, 4, {{s(1), s(2), s(0), s(1)}, {s(0), s(1), s(1), s(0)}, {s(1), s(3), s(1), s(1)}});
    CHECK(U.dim() == 2);
    CHECK(U.codim() == 2);
    Vector v = {s(5), s(7), s(11), s(13)};
    CHECK(U.quotient_coords(U.lift(U.quotient_coords(v))) == U.quotient_coords(v));
    CHECK(U.contains(std::vector<Scalar>{s(1), s(3), s(1), s(1)}));
    Vector rep = U.lift(U.quotient_coords(v));
    for (std::size_t k = 0; k < v.size(); ++k) rep[k] = v[k] - rep[k];
    CHECK(U.contains(rep));
  }

  TEST_CASE("shape errors") {
    const Field F = Field::prime(3);
    CHECK_THROWS_AS(Matrix(F, 2, 3) * Matrix(F, 2, 3), ShapeError);
  }
}
