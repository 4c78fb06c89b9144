#include "catloc/fractions.hpp"

#include <algorithm>

#include "catloc/fincat.hpp"

namespace catloc {

namespace {

void record(PropertyCheck& c, bool holds, const std::string& witness) {
  ++c.instances;
  if (holds) return;
  ++c.failures;
  if (c.counterexamples.size() < 8) c.counterexamples.push_back(witness);
}

Obj ind(const CategoryPresentation& Q, Index i) { return Obj::indecomposable(Q.size(), i); }

std::vector<Morphism> maps_with_identities(const CategoryPresentation& Q) {
  auto out = basis_morphisms(Q);
  for (auto i : nonzero_indecomposables(Q)) {
    Morphism id = identity(Q, ind(Q, i));
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

}  // namespace

Fraction make_fraction(const CategoryPresentation& Q, Morphism r, Morphism f) {
  if (!(r.src == f.src)) throw ShapeError("fraction arms have different sources");
  if (!is_regular(Q, r)) throw NotRegular("denominator " + describe(Q, r) + " is not regular");
  return Fraction{std::move(r), std::move(f)};
}

Fraction from_morphism(const CategoryPresentation& Q, const Morphism& f) {
  return Fraction{identity(Q, f.src), f};
}

Fraction invert_regular(const CategoryPresentation& Q, const Morphism& r) {
  if (!is_regular(Q, r)) throw NotRegular(describe(Q, r) + " is not regular");
  return Fraction{r, identity(Q, r.src)};
}

Fraction identity_fraction(const CategoryPresentation& Q, const Obj& X) {
  return Fraction{identity(Q, X), identity(Q, X)};
}

Fraction compose_fractions(const CategoryPresentation& Q, const Fraction& G, const Fraction& F) {
  if (!(F.target() == G.source())) throw ShapeError("fractions are not composable");
  LimitSquare sq = pullback(Q, F.f, G.r);
  // sq.a: P -> A_F is parallel to the regular G.r.
  if (!is_regular(Q, sq.a))
    throw InternalInconsistency("pullback of the regular " + describe(Q, G.r) + " has a non-regular leg");
  return Fraction{compose(Q, F.r, sq.a), compose(Q, G.f, sq.b)};
}

bool fractions_equal(const CategoryPresentation& Q, const Fraction& F, const Fraction& G) {
  if (!(F.source() == G.source()) || !(F.target() == G.target()))
    throw ShapeError("fractions with different source or target");
  LimitSquare sq = pullback(Q, F.r, G.r);
  if (!is_regular(Q, sq.a) || !is_regular(Q, sq.b))
    throw InternalInconsistency("common denominator of two fractions is not regular");
  return compose(Q, F.f, sq.a) == compose(Q, G.f, sq.b);
}

Fraction add_fractions(const CategoryPresentation& Q, const Fraction& F, const Fraction& G) {
  if (!(F.source() == G.source()) || !(F.target() == G.target()))
    throw ShapeError("fractions with different source or target");
  LimitSquare sq = pullback(Q, F.r, G.r);
  if (!is_regular(Q, sq.a)) throw InternalInconsistency("common denominator of two fractions is not regular");
  return Fraction{compose(Q, F.r, sq.a), add(compose(Q, F.f, sq.a), compose(Q, G.f, sq.b))};
}

Fraction scale_fraction(const Scalar& s, const Fraction& F) { return Fraction{F.r, scale(s, F.f)}; }

bool fraction_invertible(const CategoryPresentation& Q, const Fraction& F, Fraction* inv) {
  // f r^{-1} is invertible iff f is, with inverse r f^{-1}.
  if (!is_regular(Q, F.f)) return false;
  Fraction cand = Fraction{F.f, F.r};
  if (!fractions_equal(Q, compose_fractions(Q, cand, F), identity_fraction(Q, F.source()))) return false;
  if (!fractions_equal(Q, compose_fractions(Q, F, cand), identity_fraction(Q, F.target()))) return false;
  if (inv) *inv = cand;
  return true;
}

std::string describe(const CategoryPresentation& Q, const Fraction& F) {
  return "[" + describe(Q, F.r) + ", " + describe(Q, F.f) + "]";
}

std::vector<Morphism> regular_morphisms(const CategoryPresentation& Q, bool include_sums) {
  std::vector<Morphism> cands = maps_with_identities(Q);
  const auto basis = basis_morphisms(Q);
  if (include_sums)
    for (std::size_t x = 0; x < basis.size(); ++x)
      for (std::size_t y = x + 1; y < basis.size(); ++y) {
        if (basis[x].dst == basis[y].dst) cands.push_back(copair(Q, basis[x], basis[y]));
        if (basis[x].src == basis[y].src) cands.push_back(pair(Q, basis[x], basis[y]));
      }
  std::vector<Morphism> out;
  for (auto& m : cands)
    if (is_regular(Q, m)) out.push_back(std::move(m));
  return out;
}

bool AxiomReport::ok() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const PropertyCheck& c) { return c.ok(); });
}

const PropertyCheck& AxiomReport::clause(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return c;
  throw std::out_of_range("no clause " + name);
}

AxiomReport verify_rf_axioms(const CategoryPresentation& Q, const ScanBudget& budget) {
  PropertyCheck rf1{"RF1"}, rf2{"RF2"}, rf3{"RF3"}, lf1{"LF1"}, lf2{"LF2"}, lf3{"LF3"};
  const auto regs = regular_morphisms(Q, budget.include_sums);
  const auto maps = maps_with_identities(Q);
  std::size_t instances = 0;
  auto hit = [&]() { return budget.max_instances != 0 && instances >= budget.max_instances; };

  for (auto i : nonzero_indecomposables(Q)) {
    const bool reg = is_regular(Q, identity(Q, ind(Q, i)));
    record(rf1, reg, "id " + Q.name(i));
    record(lf1, reg, "id " + Q.name(i));
  }
  for (const auto& r1 : regs)
    for (const auto& r2 : regs) {
      if (!(r1.dst == r2.src) || hit()) continue;
      ++instances;
      const bool reg = is_regular(Q, compose(Q, r2, r1));
      const std::string w = describe(Q, r2) + " o " + describe(Q, r1);
      record(rf1, reg, w);
      record(lf1, reg, w);
    }

  for (const auto& r : regs) {
    record(rf3, is_mono(Q, r), describe(Q, r));
    record(lf3, is_epi(Q, r), describe(Q, r));
    for (const auto& f : maps) {
      if (hit()) break;
      if (f.dst == r.dst) {
        ++instances;
        const std::string w = "f=" + describe(Q, f) + ", r=" + describe(Q, r);
        try {
          LimitSquare sq = pullback(Q, f, r);
          record(rf2, is_regular(Q, sq.a), w);
        } catch (const NoKernel&) {
          record(rf2, false, w + " (no pullback)");
        }
      }
      if (f.src == r.src) {
        ++instances;
        const std::string w = "f=" + describe(Q, f) + ", r=" + describe(Q, r);
        try {
          LimitSquare sq = pushout(Q, f, r);
          // sq.c: B -> D is parallel to r.
          record(lf2, is_regular(Q, sq.c), w);
        } catch (const NoCokernel&) {
          record(lf2, false, w + " (no pushout)");
        }
      }
    }
  }
  return AxiomReport{{rf1, rf2, rf3, lf1, lf2, lf3}};
}

LocalisedCokernel localised_cokernel(const CategoryPresentation& Q, const Fraction& F) {
  Cokernel c = cokernel(Q, F.f);
  return LocalisedCokernel{c.obj, from_morphism(Q, c.map)};
}

LocalisedKernel localised_kernel(const CategoryPresentation& Q, const Fraction& F) {
  // Pushout of r: A -> X and f: A -> Y gives g: X -> D and s: Y -> D with g r = s f,
  // so f r^{-1} = s^{-1} g and s is regular.
  LimitSquare sq = pushout(Q, F.r, F.f);
  const Morphism& g = sq.c;
  if (!is_regular(Q, sq.d)) throw InternalInconsistency("left-fraction denominator is not regular");
  Kernel k = kernel(Q, g);
  return LocalisedKernel{k.obj, from_morphism(Q, k.map)};
}

AbelianReport check_abelian(const CategoryPresentation& Q, const ScanBudget& budget) {
  AbelianReport rep;
  std::vector<Morphism> maps = basis_morphisms(Q);
  if (budget.include_sums) {
    const auto basis = maps;
    for (std::size_t x = 0; x < basis.size(); ++x)
      for (std::size_t y = x + 1; y < basis.size(); ++y)
        if (basis[x].dst == basis[y].dst) maps.push_back(copair(Q, basis[x], basis[y]));
  }
  std::size_t instances = 0;
  for (const auto& f : maps) {
    if (budget.max_instances != 0 && instances++ >= budget.max_instances) break;
    const std::string w = describe(Q, f);
    Factorisation fac;
    try {
      fac = coim_im_factorise(Q, f);
    } catch (const std::runtime_error& e) {
      record(rep.regular_middle, false, w + ": " + e.what());
      continue;
    }
    const bool reg = is_regular(Q, fac.ftilde);
    record(rep.regular_middle, reg, w);
    if (!reg) continue;
    Fraction inv = invert_regular(Q, fac.ftilde);
    Fraction fwd = from_morphism(Q, fac.ftilde);
    const bool two_sided = fractions_equal(Q, compose_fractions(Q, inv, fwd), identity_fraction(Q, fac.ftilde.src)) &&
                           fractions_equal(Q, compose_fractions(Q, fwd, inv), identity_fraction(Q, fac.ftilde.dst));
    record(rep.invertible_middle, two_sided, w);
    if (!is_iso(Q, fac.ftilde)) {
      ++rep.not_invertible_in_quotient;
      const std::string d = describe(Q, fac.ftilde);
      auto& seen = rep.regular_noninvertible;
      if (seen.size() < 8 && std::find(seen.begin(), seen.end(), d) == seen.end()) seen.push_back(d);
    }
  }
  return rep;
}

}  // namespace catloc
