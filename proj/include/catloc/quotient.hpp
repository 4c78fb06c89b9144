#pragma once

#include <stdexcept>

#include "catloc/category.hpp"

namespace catloc {

class NotRigid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The additive quotient C / add S, where S is a set of indecomposables
/// (usually the support of X_T).
///
/// For every pair (i, j) the subspace F(i, j) of maps factoring through add S
/// is kept in echelon form; the quotient Hom basis is the complement of its
/// pivot positions, so the quotient data is a deterministic function of the
/// parent presentation and S.
struct QuotientCategory {
  CategoryPresentation parent;
  IndexSet xt;
  std::vector<Subspace> ideal;  // indexed i * n + j
  CategoryPresentation presentation;

  const Subspace& factoring(Index i, Index j) const { return ideal[i * parent.size() + j]; }
};

/// {i : Hom(t, i) = 0 for every summand t of T}.
IndexSet x_t_objects(const CategoryPresentation& P, const Obj& T);

/// C / X_T. Throws NotRigid unless T is rigid or allow_nonrigid is set.
QuotientCategory build_quotient(const CategoryPresentation& P, const Obj& T, bool allow_nonrigid = false);

/// C / add S for an explicit set of indecomposables.
QuotientCategory build_quotient_by(const CategoryPresentation& P, const IndexSet& S);

/// Span of all two-step compositions i -> x -> j with x in S.
Subspace factoring_subspace(const CategoryPresentation& P, const IndexSet& S, Index i, Index j);

/// Image of a parent morphism in the quotient.
Morphism project(const QuotientCategory& Q, const Morphism& f);
/// Chosen parent representative of a quotient morphism.
Morphism lift(const QuotientCategory& Q, const Morphism& qf);

/// True iff f lies in the ideal of maps factoring through add S.
bool factors_through(const CategoryPresentation& P, const Morphism& f, const IndexSet& S);

}  // namespace catloc
