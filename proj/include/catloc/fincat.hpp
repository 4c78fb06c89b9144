#pragma once

#include <string>
#include <vector>

#include "catloc/category.hpp"

namespace catloc {

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t checked_triples = 0;
  bool ok() const { return violations.empty(); }
};

struct ValidationOptions {
  /// Also check that endomorphism rings are local with residue field k and
  /// that distinct indecomposables are non-isomorphic.
  bool krull_schmidt = true;
  /// Stop collecting after this many violations.
  std::size_t max_violations = 64;
};

/// Exhaustive check of associativity and unit laws over basis triples.
ValidationReport validate_category(const CategoryPresentation& P, ValidationOptions opts = {});

/// Jacobson radical of End(i), assumed local; throws std::domain_error otherwise.
Subspace endo_radical(const CategoryPresentation& P, Index i);

/// Radical morphisms between indecomposables: all of Hom(i,j) for i != j.
bool in_radical(const CategoryPresentation& P, Index i, Index j, std::span<const Scalar> v);

enum class Side { kLeft, kRight };

/// Right perp {c : Hom(x, sigma c) = 0 for x in S}; left perp {c : Hom(c, sigma x) = 0}.
IndexSet perp(const CategoryPresentation& P, const IndexSet& S, Side side);

bool is_rigid(const CategoryPresentation& P, const Obj& T);
bool is_cluster_tilting(const CategoryPresentation& P, const Obj& T);

/// Order in which greedy reduction tries to delete summand copies.
enum class DeletionOrder { kForward, kReverse };

/// Minimal right (Side::kRight: X0 -> C) or left (C -> X0) add S-approximation.
Morphism approximation(const CategoryPresentation& P, const IndexSet& S, const Obj& C, Side side,
                       DeletionOrder order = DeletionOrder::kReverse);

/// True when Hom(x, a) is surjective for every x in S (right approximation
/// property of a: X0 -> C); the left version uses Hom(a, x).
bool has_approximation_property(const CategoryPresentation& P, const IndexSet& S,
                                const Morphism& a, Side side);

/// Indices of all indecomposables with a nonzero identity.
IndexSet nonzero_indecomposables(const CategoryPresentation& P);

IndexSet set_union(const IndexSet& a, const IndexSet& b);
bool is_subset(const IndexSet& a, const IndexSet& b);

}  // namespace catloc
