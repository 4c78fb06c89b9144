#include "catloc/modcat.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;

TEST_SUITE("modcat") {
  TEST_CASE("Gamma is the opposite of End(T)") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2", "P3"});
    const Algebra G = endomorphism_algebra(P, T);
    CHECK(G.validate());
    const auto basis = hom_basis(P, T, T);
    CHECK(G.dim == basis.size());
    for (std::size_t a = 0; a < G.dim; ++a)
      for (std::size_t b = 0; b < G.dim; ++b)
        CHECK(G.multiply(basis[a].coords, basis[b].coords) == compose(P, basis[b], basis[a]).coords);
  }

  TEST_CASE("H is a functor and Yoneda holds on add T") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const Algebra G = endomorphism_algebra(P, T);
    const auto maps = basis_morphisms(P);
    for (Index x = 0; x < P.size(); ++x) {
      const Obj X = Obj::indecomposable(P.size(), x);
      const GammaModule HX = h_object(P, T, X);
      CHECK(HX.validate(G));
      CHECK(module_hom_space(h_object(P, T, T), HX).size() == hom_dim(P, T, X));
    }
    for (const auto& f : maps)
      for (const auto& g : maps) {
        if (!(f.dst == g.src)) continue;
        CHECK(h_mor(P, T, compose(P, g, f)).matrix == h_mor(P, T, g).matrix * h_mor(P, T, f).matrix);
      }
    for (const auto& f : maps) CHECK(h_mor(P, T, f).commutes(h_object(P, T, f.src), h_object(P, T, f.dst)));
  }

  TEST_CASE("in_s agrees with regularity in the quotient") {
    const auto& P = cluster(3);
    for (const auto& T : rigid_objects(P)) {
      const auto Q = build_quotient(P, T);
      for (const auto& f : basis_morphisms(P)) CHECK(in_s(P, T, f) == is_regular(Q.presentation, project(Q, f)));
    }
  }

  TEST_CASE("equivalence for a rigid object with two summands") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const auto Q = build_quotient(P, T);
    const EquivalenceReport rep = verify_equivalence(Q, T);
    CHECK(rep.ok());
    CHECK(rep.non_identity_denominators > 0);
    CHECK_FALSE(rep.isomorphisms.empty());
  }

  TEST_CASE("without the quotient H is not faithful") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1"});
    const auto Q = build_quotient_by(P, {});
    const EquivalenceReport rep = verify_equivalence(Q, T);
    CHECK_FALSE(rep.faithful.ok());
    CHECK_FALSE(rep.ok());
  }

  TEST_CASE("realising a module map") {
    const auto& P = cluster(3);
    const Obj T = obj(P, {"P1", "P2"});
    const auto Q = build_quotient(P, T);
    const Obj X = obj(P, {"P3"}), Y = obj(P, {"P2"});
    const auto homs = module_hom_space(h_object(P, T, X), h_object(P, T, Y));
    REQUIRE_FALSE(homs.empty());
    for (const auto& phi : homs) {
      auto F = realise_module_map(Q, T, X, Y, phi);
      REQUIRE(F);
      CHECK(h_fraction(Q, T, *F).matrix == phi.matrix);
    }
  }
}
