#include "catloc/clustergen.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;

namespace {

std::vector<std::string> orientations(std::size_t n) {
  std::vector<std::string> out;
  for (unsigned m = 0; m < (1u << (n - 1)); ++m) {
    std::string s;
    for (std::size_t k = 0; k + 1 < n; ++k) s += (m >> k & 1) ? 'R' : 'L';
    out.push_back(s);
  }
  return out;
}

std::vector<long long> dimvec(const Rep& M) { return {M.dim.begin(), M.dim.end()}; }

}  // namespace

TEST_SUITE("clustergen") {
  TEST_CASE("object counts are the numbers of diagonals") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(cluster(n).size() == n * (n + 3) / 2);
    CHECK(cluster(2).size() == 5);
    CHECK(cluster(3).size() == 9);
    CHECK(cluster(4).size() == 14);
  }

  TEST_CASE("Auslander-Reiten formula Ext^1(M,N) = D Hom(N, tau M)") {
    const Field F = Field::prime(101);
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& o : orientations(n)) {
        const QuiverAn Q = QuiverAn::parse(n, o);
        const auto reps = indecomposable_reps(Q, F);
        CHECK(reps.size() == n * (n + 1) / 2);
        for (const auto& M : reps) {
          const auto tM = tau(Q, F, M);
          for (const auto& N : reps) {
            const std::size_t rhs = tM ? hom_rep(Q, F, N, *tM).size() : 0;
            CHECK(ext1_rep(Q, F, M, N) == rhs);
          }
        }
      }
  }

  TEST_CASE("tau agrees with the Coxeter transformation and inverts tau^-1") {
    const Field F = Field::rationals();
    for (const auto& o : orientations(3)) {
      const QuiverAn Q = QuiverAn::parse(3, o);
      for (const auto& M : indecomposable_reps(Q, F)) {
        if (auto t = tau(Q, F, M)) {
          CHECK(dimvec(*t) == coxeter(Q, dimvec(M)));
          auto back = tau_inv(Q, F, *t);
          REQUIRE(back);
          CHECK(interval_of(*back) == interval_of(M));
        }
      }
    }
  }

  TEST_CASE("projectives and injectives of the linear quiver") {
    const Field F = Field::prime(7);
    const QuiverAn Q = QuiverAn::linear(3);
    // 1 <- 2 <- 3: P_v is supported on 1..v.
    CHECK(interval_of(projective_rep(Q, F, 2)) == std::make_pair<std::size_t, std::size_t>(0, 2));
    CHECK(interval_of(injective_rep(Q, F, 0)) == std::make_pair<std::size_t, std::size_t>(0, 2));
    CHECK_FALSE(tau(Q, F, projective_rep(Q, F, 1)));
    CHECK_FALSE(tau_inv(Q, F, injective_rep(Q, F, 1)));
  }

  TEST_CASE("every orientation gives a valid 2-CY category matching the polygon") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& o : orientations(n)) {
        const auto P = build_cluster_category(n, o, Field::prime(101));
        CHECK(validate_category(P).ok());
        const auto d = diagonal_labels(P);
        for (Index x = 0; x < P.size(); ++x)
          for (Index y = 0; y < P.size(); ++y) {
            CHECK(P.hom_dim(x, y) == (chords_cross(d[x], rotate_chord(d[y], 1, n + 3)) ? 1u : 0u));
            CHECK(P.hom_dim(x, y) == P.hom_dim(y, P.sigma(P.sigma(x))));
          }
      }
  }

  TEST_CASE("C(A_3) names and suspension") {
    const auto& P = cluster(3);
    CHECK(P.names() == std::vector<std::string>{"P1", "P2", "P3", "S2", "I2", "I3", "ΣP1", "ΣP2", "ΣP3"});
    CHECK(P.sigma(idx(P, "S2")) == idx(P, "P1"));
    CHECK(P.sigma(idx(P, "ΣP1")) == idx(P, "P3"));
    CHECK(idx(P, "SigmaP3") == idx(P, "ΣP3"));
    CHECK(idx(P, "I1") == idx(P, "P3"));
    // Sigma rotates the hexagon.
    for (Index x = 0; x < P.size(); ++x) {
      Index y = x;
      for (int k = 0; k < 6; ++k) y = P.sigma(y);
      CHECK(y == x);
    }
  }

  TEST_CASE("the rational and prime field builds agree on dimensions") {
    const auto& A = cluster(3, Field::rationals());
    const auto& B = cluster(3, Field::prime(101));
    for (Index x = 0; x < 9; ++x)
      for (Index y = 0; y < 9; ++y) CHECK(A.hom_dim(x, y) == B.hom_dim(x, y));
  }

  TEST_CASE("translation quiver isomorphism") {
    const auto D = DiagonalModel::build(3);
    const auto G = diagonal_translation_quiver(D);
    auto phi = translation_quiver_isomorphism(G, G);
    REQUIRE(phi);
    auto H = G;
    H.arrows.pop_back();
    CHECK_FALSE(translation_quiver_isomorphism(G, H));
  }

  TEST_CASE("bad input") {
    CHECK_THROWS(build_cluster_category(0, "", Field::rationals()));
    CHECK_THROWS(build_cluster_category(3, "LX", Field::rationals()));
    CHECK_THROWS(build_cluster_category(3, "L", Field::rationals()));
  }
}
