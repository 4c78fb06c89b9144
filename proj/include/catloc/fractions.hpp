#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "catloc/preabelian.hpp"

namespace catloc {

class NotRegular : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A right fraction [r, f] from X to Y: r: A -> X regular, f: A -> Y. It stands
/// for f o r^{-1} in the localisation at the regular morphisms.
struct Fraction {
  Morphism r;
  Morphism f;

  const Obj& source() const { return r.dst; }
  const Obj& target() const { return f.dst; }
  const Obj& aux() const { return r.src; }
};

/// Builds [r, f]; throws NotRegular unless r is regular, ShapeError on mismatched sources.
Fraction make_fraction(const CategoryPresentation& Q, Morphism r, Morphism f);

/// [id, f].
Fraction from_morphism(const CategoryPresentation& Q, const Morphism& f);
/// [r, id]; throws NotRegular.
Fraction invert_regular(const CategoryPresentation& Q, const Morphism& r);
Fraction identity_fraction(const CategoryPresentation& Q, const Obj& X);

/// G o F, completing f_F and r_G to a pullback square.
Fraction compose_fractions(const CategoryPresentation& Q, const Fraction& G, const Fraction& F);

/// Pull both denominators back to a common one and compare numerators.
bool fractions_equal(const CategoryPresentation& Q, const Fraction& F, const Fraction& G);

Fraction add_fractions(const CategoryPresentation& Q, const Fraction& F, const Fraction& G);
Fraction scale_fraction(const Scalar& s, const Fraction& F);

/// True when F has a two-sided inverse; the inverse is returned through inv.
bool fraction_invertible(const CategoryPresentation& Q, const Fraction& F, Fraction* inv = nullptr);

std::string describe(const CategoryPresentation& Q, const Fraction& F);

/// Regular morphisms among basis morphisms, identities and (with include_sums)
/// two-term copairs and pairs of basis morphisms.
std::vector<Morphism> regular_morphisms(const CategoryPresentation& Q, bool include_sums);

struct AxiomReport {
  std::vector<PropertyCheck> clauses;  // RF1, RF2, RF3, LF1, LF2, LF3 in this order
  bool ok() const;
  const PropertyCheck& clause(const std::string& name) const;
};

/// RF1: identities and composites of regular morphisms are regular. RF2: the
/// pullback of a regular morphism along any map has a regular leg. RF3: regular
/// morphisms are mono, which lets r' = id witness cancellation. LF1-LF3 dually.
AxiomReport verify_rf_axioms(const CategoryPresentation& Q, const ScanBudget& budget = {});

struct LocalisedCokernel {
  Obj obj;
  Fraction map;
};
struct LocalisedKernel {
  Obj obj;
  Fraction map;
};

/// from_morphism(coker f) for F = [r, f].
LocalisedCokernel localised_cokernel(const CategoryPresentation& Q, const Fraction& F);
/// Rewrites F as a left fraction s^{-1} g using a pushout (s f = g r), then takes ker g.
LocalisedKernel localised_kernel(const CategoryPresentation& Q, const Fraction& F);

struct AbelianReport {
  PropertyCheck regular_middle{"coimage-image map is regular"};
  PropertyCheck invertible_middle{"coimage-image map is invertible after localising"};
  std::size_t not_invertible_in_quotient = 0;
  std::vector<std::string> regular_noninvertible;  // witnesses, first few
  bool ok() const { return regular_middle.ok() && invertible_middle.ok(); }
};

/// For every basis morphism (and, with include_sums, two-term copairs): the middle
/// map of coim_im_factorise is regular and becomes invertible as a fraction.
AbelianReport check_abelian(const CategoryPresentation& Q, const ScanBudget& budget = {});

}  // namespace catloc
