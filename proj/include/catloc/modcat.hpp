#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "catloc/fractions.hpp"
#include "catloc/quotient.hpp"

namespace catloc {

class NotInS : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma = End(T)^op: basis = basis of Hom(T, T), product a * b = b o a.
struct Algebra {
  Field field = Field::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> left_mult;  // left_mult[a] is the matrix of b -> a * b
  Vector unit;

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Associativity and unit laws on all basis triples.
  bool validate() const;
};

/// H(X) = Hom(T, X); the basis element e of Gamma acts by m -> m o e.
struct GammaModule {
  Obj object;
  std::size_t dim = 0;
  std::vector<Matrix> action;  // one dim x dim matrix per algebra basis element

  /// action(a * b) = action(a) action(b) and the unit acts as identity.
  bool validate(const Algebra& G) const;
};

struct ModuleMap {
  Matrix matrix;  // dim(target) x dim(source)

  bool commutes(const GammaModule& M, const GammaModule& N) const;
};

Algebra endomorphism_algebra(const CategoryPresentation& P, const Obj& T);
GammaModule h_object(const CategoryPresentation& P, const Obj& T, const Obj& X);
/// Post-composition with f.
ModuleMap h_mor(const CategoryPresentation& P, const Obj& T, const Morphism& f);
/// H(f) is an isomorphism.
bool in_s(const CategoryPresentation& P, const Obj& T, const Morphism& f);
/// H(f) H(r)^{-1} for lifts of the arms of a fraction in Q.parent / X_T.
ModuleMap h_fraction(const QuotientCategory& Q, const Obj& T, const Fraction& F);
/// Basis of the module maps M -> N.
std::vector<ModuleMap> module_hom_space(const GammaModule& M, const GammaModule& N);

struct EquivalenceBudget {
  std::uint64_t seed = 0x5eed;
  /// Denominator objects tried per (X, Y, phi), in ascending total multiplicity.
  std::size_t max_aux_objects = 4096;
  /// Random denominators tried per auxiliary object.
  std::size_t tries_per_object = 8;
  /// Restrict FULL to these ordered pairs of indecomposables (empty = all pairs).
  std::vector<std::pair<Index, Index>> pairs;
};

struct EquivalenceReport {
  PropertyCheck faithful{"FAITHFUL"};
  PropertyCheck full{"FULL"};
  PropertyCheck projectives{"PROJECTIVES"};
  PropertyCheck end_dimension{"END_DIMENSION"};
  std::size_t non_identity_denominators = 0;
  std::vector<std::string> witnesses;  // fractions that needed a proper denominator, first few
  std::vector<std::string> isomorphisms;  // projectives outside T isomorphic to an add T object after localising
  bool ok() const { return faithful.ok() && full.ok() && projectives.ok() && end_dimension.ok(); }
};

/// FAITHFUL: on every Hom(i, j) the kernel of H is the subspace of maps factoring
/// through X_T. FULL: every basis module map H(X) -> H(Y) is the image of a fraction
/// [r, f] found by searching denominators r: A -> X with H(r) invertible. PROJECTIVES:
/// X is projective after localising (H of its add T-approximation a: T_0 -> X splits,
/// the section is realised as a fraction and [a] o section = id by fractions_equal)
/// iff X is isomorphic after localising to a summand of T_0, certified by a pair of
/// mutually inverse fractions. END_DIMENSION: dim End(T) = dim End_Gamma(H T).
EquivalenceReport verify_equivalence(const QuotientCategory& Q, const Obj& T, const EquivalenceBudget& budget = {});

/// Searches a fraction X => Y whose image under H is phi.
std::optional<Fraction> realise_module_map(const QuotientCategory& Q, const Obj& T, const Obj& X, const Obj& Y,
                                           const ModuleMap& phi, const EquivalenceBudget& budget = {});

}  // namespace catloc
