#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "catloc/category.hpp"

namespace catloc {

/// Certified non-existence of a cokernel.
class NoCokernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certified non-existence of a kernel.
class NoKernel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search gave up before it could certify either outcome.
class BoundsExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_epi(const CategoryPresentation& P, const Morphism& f);
bool is_mono(const CategoryPresentation& P, const Morphism& f);
bool is_regular(const CategoryPresentation& P, const Morphism& f);

/// Two-sided inverse of f, if f is an isomorphism.
std::optional<Morphism> inverse_morphism(const CategoryPresentation& P, const Morphism& f);
bool is_iso(const CategoryPresentation& P, const Morphism& f);

/// c o f = 0, c epi, and every g with g o f = 0 factors through c.
bool is_cokernel_map(const CategoryPresentation& P, const Morphism& f, const Morphism& c);
/// f o j = 0, j mono, and every g with f o g = 0 factors through j.
bool is_kernel_map(const CategoryPresentation& P, const Morphism& f, const Morphism& j);

/// The cokernel c: Y -> M of f: X -> Y.
///
/// Write K(Z) for the maps Y -> Z killing f. If a cokernel exists then K is
/// represented by M, so M is read off from the top K / rad K and c from lifts of
/// a top basis. The candidate is then checked against the universal property;
/// when the check fails no cokernel exists (NoCokernel), because any cokernel
/// would be isomorphic to this candidate. Requires local endomorphism rings with
/// residue field k and pairwise non-isomorphic indecomposables.
struct Cokernel {
  Obj obj;
  Morphism map;  // Y -> obj
};
struct Kernel {
  Obj obj;
  Morphism map;  // obj -> X
};

Cokernel cokernel(const CategoryPresentation& P, const Morphism& f);
Kernel kernel(const CategoryPresentation& P, const Morphism& f);
std::optional<Cokernel> try_cokernel(const CategoryPresentation& P, const Morphism& f);
std::optional<Kernel> try_kernel(const CategoryPresentation& P, const Morphism& f);

struct SearchOptions {
  std::uint64_t seed = 0x5eed;
  /// Random trials per candidate object when exhaustive enumeration is too large.
  std::size_t retries = 24;
  /// Enumerate the whole candidate map space when it has at most this many elements (F_p only).
  std::size_t exhaustive_limit = 4096;
  /// Maximum number of candidate objects.
  std::size_t candidate_ceiling = 1u << 20;
  /// Random coefficients over Q are drawn from [-coefficient_range, coefficient_range].
  int coefficient_range = 7;
};

/// Bounded search for a cokernel: candidate objects M with mult_i(M) <= dim Hom(Y, i)
/// in ascending total multiplicity, filtered by dim Hom(M, Z) = dim K(Z), then maps
/// c in {c : c o f = 0} tested with is_cokernel_map. Throws NoCokernel when the
/// search was exhaustive, BoundsExceeded otherwise.
Cokernel cokernel_search(const CategoryPresentation& P, const Morphism& f, const SearchOptions& opts = {});
Kernel kernel_search(const CategoryPresentation& P, const Morphism& f, const SearchOptions& opts = {});

/// c o a = d o b with a: A -> B, b: A -> C, c: B -> D, d: C -> D.
struct LimitSquare {
  Obj A, B, C, D;
  Morphism a, b, c, d;
};

/// Kernel of [c, -d]: B + C -> D. Throws NoKernel.
LimitSquare pullback(const CategoryPresentation& P, const Morphism& c, const Morphism& d);
/// Cokernel of (a, -b)^T: A -> B + C. Throws NoCokernel.
LimitSquare pushout(const CategoryPresentation& P, const Morphism& a, const Morphism& b);

/// Checks that every (x: W -> B, y: W -> C) with c x = d y factors uniquely through
/// the square, for all W indecomposable (a linear condition on Hom spaces).
bool is_pullback_square(const CategoryPresentation& P, const LimitSquare& s);
bool is_pushout_square(const CategoryPresentation& P, const LimitSquare& s);

/// f = v o ftilde o u with u: X -> coim f, v: im f -> Y.
struct Factorisation {
  Morphism u;
  Morphism ftilde;
  Morphism v;
};
Factorisation coim_im_factorise(const CategoryPresentation& P, const Morphism& f);

/// Basis morphisms between pairs of nonzero indecomposables.
std::vector<Morphism> basis_morphisms(const CategoryPresentation& P);

struct ScanBudget {
  /// Also use copairs [x, y]: B1 + B2 -> D of two basis morphisms as the second map.
  bool include_sums = true;
  /// Stop after this many pullback/pushout instances (0 = unlimited).
  std::size_t max_instances = 0;
};

struct PropertyCheck {
  PropertyCheck() = default;
  explicit PropertyCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only
  bool ok() const { return failures == 0; }
};

struct PropertyReport {
  PropertyCheck kernels{"kernels exist"};
  PropertyCheck cokernels{"cokernels exist"};
  std::vector<PropertyCheck> pullback_checks;
  std::vector<PropertyCheck> pushout_checks;
  bool truncated = false;

  bool preabelian() const { return kernels.ok() && cokernels.ok(); }
  bool integral() const;
  bool semi_abelian() const;
  bool ok() const { return preabelian() && integral(); }
};

/// Kernels and cokernels of all basis morphisms, then pullbacks and pushouts over
/// pairs (basis morphism, basis morphism or two-term copair/pair) with a common
/// target/source, checking that the parallel leg inherits cokernel/kernel, epi,
/// mono and regular properties.
PropertyReport scan_properties(const CategoryPresentation& P, const ScanBudget& budget = {});

/// Sink map into i: the sum of a basis of the radical maps j -> i over all j.
Morphism sink_map(const CategoryPresentation& P, Index i);
/// Source map out of i, dual to sink_map.
Morphism source_map(const CategoryPresentation& P, Index i);

/// Lifting property of X against a family of epimorphisms: sink maps, epi basis
/// morphisms between indecomposables and, with include_sums, epi copairs of two
/// basis morphisms.
bool is_projective_object(const CategoryPresentation& P, const Obj& X, const ScanBudget& budget = {});
bool is_injective_object(const CategoryPresentation& P, const Obj& X, const ScanBudget& budget = {});

}  // namespace catloc
