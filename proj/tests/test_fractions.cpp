#include "catloc/fractions.hpp"
#include "catloc/quotient.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace catloc;
using namespace catloc::testing;

namespace {

const QuotientCategory& q12() {
  static const QuotientCategory Q = [] {
    const auto& P = cluster(3);
    return build_quotient(P, obj(P, {"P1", "P2"}));
  }();
  return Q;
}

}  // namespace

TEST_SUITE("fractions") {
  TEST_CASE("fraction arithmetic identities") {
    const auto& QP = q12().presentation;
    const auto regs = regular_morphisms(QP, true);
    REQUIRE_FALSE(regs.empty());
    const auto maps = basis_morphisms(QP);
    for (const auto& r : regs)
      for (const auto& f : maps) {
        if (!(f.src == r.src)) continue;
        const Fraction F = make_fraction(QP, r, f);
        CHECK(fractions_equal(QP, F, F));
        CHECK(fractions_equal(QP, compose_fractions(QP, identity_fraction(QP, F.target()), F), F));
        CHECK(fractions_equal(QP, compose_fractions(QP, F, identity_fraction(QP, F.source())), F));
        // (f r^-1) r = f
        CHECK(fractions_equal(QP, compose_fractions(QP, F, from_morphism(QP, r)), from_morphism(QP, f)));
      }
    for (const auto& r : regs) {
      const Fraction inv = invert_regular(QP, r);
      CHECK(fractions_equal(QP, compose_fractions(QP, inv, from_morphism(QP, r)), identity_fraction(QP, r.src)));
      CHECK(fractions_equal(QP, compose_fractions(QP, from_morphism(QP, r), inv), identity_fraction(QP, r.dst)));
    }
  }

  TEST_CASE("composition of fractions is associative") {
    const auto& QP = q12().presentation;
    const auto regs = regular_morphisms(QP, false);
    std::vector<Fraction> fr;
    for (const auto& r : regs)
      for (const auto& f : basis_morphisms(QP))
        if (f.src == r.src) fr.push_back(make_fraction(QP, r, f));
    std::size_t triples = 0;
    for (const auto& a : fr)
      for (const auto& b : fr) {
        if (!(a.target() == b.source())) continue;
        for (const auto& c : fr) {
          if (!(b.target() == c.source())) continue;
          ++triples;
          CHECK(fractions_equal(QP, compose_fractions(QP, c, compose_fractions(QP, b, a)),
                                compose_fractions(QP, compose_fractions(QP, c, b), a)));
        }
      }
    CHECK(triples > 0);
  }

  TEST_CASE("a non-regular denominator is refused") {
    const auto& P = cluster(3);
    const auto& QP = q12().presentation;
    const Morphism z = zero_morphism(QP, obj(P, {"P3"}), obj(P, {"I2"}));
    CHECK_THROWS_AS(make_fraction(QP, z, z), NotRegular);
  }

  TEST_CASE("a proper fraction is not a morphism of the quotient") {
    const auto& P = cluster(3);
    const auto& QP = q12().presentation;
    // P2 -> P3 is regular but not invertible, so its inverse is a new map.
    const Morphism r = basis_morphism(QP, idx(P, "P2"), idx(P, "P3"), 0);
    CHECK(is_regular(QP, r));
    CHECK_FALSE(is_iso(QP, r));
    const Fraction inv = invert_regular(QP, r);
    for (const auto& g : hom_basis(QP, inv.source(), inv.target()))
      CHECK_FALSE(fractions_equal(QP, inv, from_morphism(QP, g)));
    CHECK(hom_basis(QP, obj(P, {"P3"}), obj(P, {"P2"})).empty());
  }

  TEST_CASE("RF and LF axioms") {
    const auto& P = cluster(3);
    for (const auto& T : rigid_objects(P, 2)) {
      const auto Q = build_quotient(P, T);
      CHECK(verify_rf_axioms(Q.presentation).ok());
    }
    const auto bad = build_quotient_by(P, {idx(P, "P1"), idx(P, "P2"), idx(P, "I2")});
    const AxiomReport rep = verify_rf_axioms(bad.presentation);
    CHECK_FALSE(rep.clause("RF2").ok());
    CHECK_FALSE(rep.clause("LF2").ok());
    CHECK(rep.clause("RF1").ok());
  }

  TEST_CASE("localised kernels and cokernels") {
    const auto& QP = q12().presentation;
    for (const auto& f : basis_morphisms(QP)) {
      const Fraction F = from_morphism(QP, f);
      const auto c = localised_cokernel(QP, F);
      const Fraction zero_t = from_morphism(QP, zero_morphism(QP, F.source(), c.obj));
      CHECK(fractions_equal(QP, compose_fractions(QP, c.map, F), zero_t));
      const auto k = localised_kernel(QP, F);
      const Fraction zero_s = from_morphism(QP, zero_morphism(QP, k.obj, F.target()));
      CHECK(fractions_equal(QP, compose_fractions(QP, F, k.map), zero_s));
    }
  }

  TEST_CASE("abelian check and regular non-invertible maps") {
    const auto& P = cluster(3);
    const auto rep = check_abelian(q12().presentation);
    CHECK(rep.ok());
    CHECK(rep.not_invertible_in_quotient > 0);
    CHECK_FALSE(rep.regular_noninvertible.empty());
    const auto ct = build_quotient(P, obj(P, {"P1", "P2", "P3"}));
    const auto rep_ct = check_abelian(ct.presentation);
    CHECK(rep_ct.ok());
    CHECK(rep_ct.not_invertible_in_quotient == 0);
  }
}
