#include "catloc/preabelian.hpp"
#include "catloc/quotient.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;

TEST_SUITE("quotient") {
  TEST_CASE("X_T is the set of objects with no maps from T") {
    const auto& P = cluster(3);
    const auto d = diagonal_labels(P);
    for (const auto& T : rigid_objects(P)) {
      IndexSet expect;
      for (Index x = 0; x < P.size(); ++x) {
        bool none = true;
        for (auto t : T.support()) none = none && !chords_cross(d[t], rotate_chord(d[x], 1, 6));
        if (none) expect.push_back(x);
      }
      CHECK(x_t_objects(P, T) == expect);
    }
  }

  TEST_CASE("cluster-tilting T gives X_T = add Sigma T") {
    const auto& P = cluster(3);
    for (const auto& T : rigid_objects(P)) {
      if (!is_cluster_tilting(P, T)) continue;
      IndexSet st;
      for (auto t : T.support()) st.push_back(P.sigma(t));
      std::sort(st.begin(), st.end());
      CHECK(x_t_objects(P, T) == st);
    }
  }

  TEST_CASE("the factoring subspaces form an ideal") {
    const auto& P = cluster(3);
    const Field& F = P.field();
    for (const auto& T : rigid_objects(P, 2)) {
      const auto Q = build_quotient(P, T);
      const std::size_t n = P.size();
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          for (const auto& f : Q.factoring(i, j).basis())
            for (Index k = 0; k < n; ++k)
              for (std::size_t b = 0; b < P.hom_dim(j, k); ++b) {
                Vector g = zero_vector(F, P.hom_dim(j, k));
                g[b] = Scalar::one(F);
                CHECK(Q.factoring(i, k).contains(P.compose(i, j, k, g, f)));
              }
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          for (const auto& g : Q.factoring(i, j).basis())
            for (Index h = 0; h < n; ++h)
              for (std::size_t b = 0; b < P.hom_dim(h, i); ++b) {
                Vector f = zero_vector(F, P.hom_dim(h, i));
                f[b] = Scalar::one(F);
                CHECK(Q.factoring(h, j).contains(P.compose(h, i, j, g, f)));
              }
    }
  }

  TEST_CASE("project and lift") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const auto Q = build_quotient(P, T);
    for (const auto& qf : basis_morphisms(Q.presentation)) CHECK(project(Q, lift(Q, qf)) == qf);
    for (const auto& f : basis_morphisms(P)) CHECK(project(Q, f).is_zero() == factors_through(P, f, Q.xt));
    for (auto x : Q.xt) CHECK(Q.presentation.is_zero_object(x));
    CHECK(validate_category(Q.presentation).ok());
  }

  TEST_CASE("identities of killed objects factor through them") {
    const auto& P = cluster(3);
    const IndexSet S = {idx(P, "S2")};
    const Subspace U = factoring_subspace(P, S, idx(P, "S2"), idx(P, "S2"));
    CHECK(U.codim() == 0);
  }

  TEST_CASE("non-rigid T is refused") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "ΣP1"});
    CHECK_FALSE(is_rigid(P, T));
    CHECK_THROWS_AS(build_quotient(P, T), NotRigid);
    CHECK_NOTHROW(build_quotient(P, T, true));
  }
}
