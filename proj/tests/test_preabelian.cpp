#include "catloc/preabelian.hpp"
#include "catloc/quotient.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;

namespace {

const QuotientCategory& counterexample_quotient() {
  static const QuotientCategory Q = [] {
    const auto& P = cluster(3);
    const IndexSet U = {idx(P, "P2"), idx(P, "P3"), idx(P, "ΣP3")};
    return build_quotient_by(P, perp(P, U, Side::kRight));
  }();
  return Q;
}

}  // namespace

TEST_SUITE("preabelian") {
  TEST_CASE("identities and zero maps") {
    const auto& P = cluster(3);
    const Obj X = obj(P, {"P2"}), Y = obj(P, {"I2"});
    CHECK(is_iso(P, identity(P, X)));
    CHECK(is_regular(P, identity(P, X)));
    const Morphism z = zero_morphism(P, X, Y);
    CHECK_FALSE(is_epi(P, z));
    CHECK_FALSE(is_mono(P, z));
    const Cokernel c = cokernel(P, identity(P, X));
    CHECK(c.obj.is_zero());
  }

  TEST_CASE("cover cokernels satisfy the universal property and agree with the search") {
    const auto& P = cluster(3);
    for (const auto& T : rigid_objects(P, 2)) {
      const auto Q = build_quotient(P, T);
      const auto& QP = Q.presentation;
      for (const auto& f : basis_morphisms(QP)) {
        const Cokernel c = cokernel(QP, f);
        CHECK(is_cokernel_map(QP, f, c.map));
        const Kernel k = kernel(QP, f);
        CHECK(is_kernel_map(QP, f, k.map));
        const Cokernel s = cokernel_search(QP, f);
        // Cokernels are unique up to isomorphism; in a Krull-Schmidt category the
        // objects have equal multiplicities on nonzero indecomposables.
        for (auto i : nonzero_indecomposables(QP)) CHECK(s.obj.mult[i] == c.obj.mult[i]);
        CHECK(is_cokernel_map(QP, f, s.map));
      }
    }
  }

  TEST_CASE("two cokernels differ by an isomorphism") {
    const auto& P = cluster(3);
    const auto Q = build_quotient(P, obj(P, {"P1"}));
    const auto& QP = Q.presentation;
    for (const auto& f : basis_morphisms(QP)) {
      const Cokernel a = cokernel(QP, f);
      const Cokernel b = cokernel_search(QP, f);
      if (!(a.obj == b.obj)) continue;
      // The comparison map is the unique u with u a.map = b.map.
      const Matrix pre = precompose_matrix(QP, a.map, b.obj);
      auto u = solve(pre, b.map.coords);
      REQUIRE(u);
      CHECK(is_iso(QP, from_coords(a.obj, b.obj, *u)));
    }
  }

  TEST_CASE("limit squares") {
    const auto& P = cluster(3);
    const auto Q = build_quotient(P, obj(P, {"P1", "P2"}));
    const auto& QP = Q.presentation;
    const auto maps = basis_morphisms(QP);
    for (const auto& c : maps)
      for (const auto& d : maps) {
        if (c.dst == d.dst) {
          const LimitSquare sq = pullback(QP, c, d);
          CHECK(is_pullback_square(QP, sq));
          CHECK(compose(QP, sq.c, sq.a) == compose(QP, sq.d, sq.b));
        }
        if (c.src == d.src) CHECK(is_pushout_square(QP, pushout(QP, c, d)));
      }
  }

  TEST_CASE("coimage-image factorisation recomposes") {
    const auto& P = cluster(3);
    const auto Q = build_quotient(P, obj(P, {"P1", "P2"}));
    const auto& QP = Q.presentation;
    for (const auto& f : basis_morphisms(QP)) {
      const Factorisation fac = coim_im_factorise(QP, f);
      CHECK(compose(QP, fac.v, compose(QP, fac.ftilde, fac.u)) == f);
    }
  }

  TEST_CASE("the quotient by U-perp has no cokernel for P3 -> I2") {
    const auto& Q = counterexample_quotient();
    const auto& QP = Q.presentation;
    CHECK(Q.xt == IndexSet{idx(QP, "P1"), idx(QP, "P2"), idx(QP, "S2")});
    REQUIRE(QP.hom_dim(idx(QP, "P3"), idx(QP, "I2")) == 1);
    const Morphism f = basis_morphism(QP, idx(QP, "P3"), idx(QP, "I2"), 0);
    CHECK_THROWS_AS(cokernel(QP, f), NoCokernel);
    CHECK_THROWS_AS(cokernel_search(QP, f), NoCokernel);
    CHECK_FALSE(try_cokernel(QP, f));
    CHECK_FALSE(scan_properties(QP).preabelian());
  }

  TEST_CASE("a tiny search ceiling reports BoundsExceeded, not NoCokernel") {
    const auto& Q = counterexample_quotient();
    const auto& QP = Q.presentation;
    const Morphism f = basis_morphism(QP, idx(QP, "P3"), idx(QP, "I2"), 0);
    SearchOptions tight;
    tight.candidate_ceiling = 0;
    CHECK_THROWS_AS(cokernel_search(QP, f, tight), BoundsExceeded);
  }

  TEST_CASE("a quotient that is preabelian and semi-abelian but not integral") {
    const auto& P = cluster(3);
    const auto Q = build_quotient_by(P, {idx(P, "P1"), idx(P, "P2"), idx(P, "I2")});
    const PropertyReport rep = scan_properties(Q.presentation);
    CHECK(rep.preabelian());
    CHECK(rep.semi_abelian());
    CHECK_FALSE(rep.integral());
  }

  TEST_CASE("projective and injective objects of a quotient") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2", "P3"});
    const auto Q = build_quotient(P, T);
    for (auto t : T.support()) CHECK(is_projective_object(Q.presentation, Obj::indecomposable(P.size(), t)));
  }
}
