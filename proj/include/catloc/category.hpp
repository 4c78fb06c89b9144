#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catloc/matrix.hpp"
#include "json.hpp"

namespace catloc {

using Index = std::size_t;
using IndexSet = std::vector<Index>;  // sorted, unique

/// Raised when an Ext^1 computation needs a suspension the presentation lacks.
class MissingSuspension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite k-linear Krull-Schmidt category given by Hom bases and structure
/// constants between its indecomposables.
///
/// constant(i, j, k, a, b, c) is the coefficient of basis element c of
/// Hom(i, k) in (basis b of Hom(j, k)) o (basis a of Hom(i, j)).
class CategoryPresentation {
 public:
  CategoryPresentation(Field field, std::vector<std::string> names);

  const Field& field() const { return field_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index i) const { return names_.at(i); }
  /// Looks a name up among the indecomposables and the alias table.
  std::optional<Index> find(const std::string& name) const;

  std::size_t hom_dim(Index i, Index j) const { return hom_dim_[i * size() + j]; }
  void set_hom_dim(Index i, Index j, std::size_t d);

  const Scalar& constant(Index i, Index j, Index k, std::size_t a, std::size_t b,
                         std::size_t c) const;
  void set_constant(Index i, Index j, Index k, std::size_t a, std::size_t b, std::size_t c,
                    const Scalar& v);

  const Vector& identity(Index i) const { return identity_.at(i); }
  void set_identity(Index i, Vector coords);

  /// Composition of coefficient vectors g in Hom(j,k) and f in Hom(i,j).
  Vector compose(Index i, Index j, Index k, std::span<const Scalar> g,
                 std::span<const Scalar> f) const;
  /// Accumulates g o f into out (length hom_dim(i,k)).
  void compose_into(Index i, Index j, Index k, std::span<const Scalar> g, std::span<const Scalar> f,
                    std::span<Scalar> out) const;

  bool has_sigma() const { return sigma_.has_value(); }
  Index sigma(Index i) const;
  Index sigma_inv(Index i) const;
  void set_sigma(std::vector<Index> perm);
  const std::optional<std::vector<Index>>& sigma_table() const { return sigma_; }

  /// Presentations produced as quotients may contain zero objects.
  bool allows_zero_objects() const { return allows_zero_objects_; }
  void set_allows_zero_objects(bool v) { allows_zero_objects_ = v; }
  bool is_zero_object(Index i) const { return hom_dim(i, i) == 0; }

  const std::map<std::string, Index>& aliases() const { return aliases_; }
  void add_alias(const std::string& alias, Index i);

  nlohmann::json& metadata() { return metadata_; }
  const nlohmann::json& metadata() const { return metadata_; }

  /// The opposite category; its suspension is the inverse permutation.
  CategoryPresentation opposite() const;

  friend bool operator==(const CategoryPresentation& a, const CategoryPresentation& b);

 private:
  std::size_t triple(Index i, Index j, Index k) const { return (i * size() + j) * size() + k; }

  Field field_;
  std::vector<std::string> names_;
  std::vector<std::size_t> hom_dim_;
  std::vector<Vector> constants_;  // per triple, dense [a][b][c]
  std::vector<Vector> identity_;
  std::optional<std::vector<Index>> sigma_;
  std::vector<Index> sigma_inv_;
  bool allows_zero_objects_ = false;
  std::map<std::string, Index> aliases_;
  nlohmann::json metadata_ = nlohmann::json::object();
};

/// A formal direct sum of indecomposables, by multiplicity.
struct Obj {
  std::vector<std::size_t> mult;

  static Obj zero(std::size_t n) { return Obj{std::vector<std::size_t>(n, 0)}; }
  static Obj indecomposable(std::size_t n, Index i, std::size_t copies = 1);
  static Obj from_set(std::size_t n, const IndexSet& s);

  std::size_t total() const;
  bool is_zero() const { return total() == 0; }
  /// Indecomposable index of every summand copy, ascending.
  std::vector<Index> slots() const;
  IndexSet support() const;
  Obj operator+(const Obj& o) const;

  friend bool operator==(const Obj&, const Obj&) = default;
  friend auto operator<=>(const Obj&, const Obj&) = default;
};

std::string to_string(const CategoryPresentation& P, const Obj& X);

/// Coordinate layout of Hom(X, Y): one block per (target slot, source slot).
struct HomLayout {
  std::vector<Index> src_slots;
  std::vector<Index> dst_slots;
  std::vector<std::size_t> offsets;  // row-major over (t, s), plus end sentinel
  std::size_t dim = 0;

  std::size_t block_offset(std::size_t t, std::size_t s) const {
    return offsets[t * src_slots.size() + s];
  }
  std::size_t block_dim(std::size_t t, std::size_t s) const {
    return offsets[t * src_slots.size() + s + 1] - offsets[t * src_slots.size() + s];
  }
};

HomLayout hom_layout(const CategoryPresentation& P, const Obj& X, const Obj& Y);
std::size_t hom_dim(const CategoryPresentation& P, const Obj& X, const Obj& Y);

/// A morphism X -> Y, stored as coordinates in the Hom(X, Y) layout.
struct Morphism {
  Obj src;
  Obj dst;
  Vector coords;

  bool is_zero() const { return is_zero_vector(coords); }
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

Morphism zero_morphism(const CategoryPresentation& P, const Obj& X, const Obj& Y);
Morphism identity(const CategoryPresentation& P, const Obj& X);
/// Morphism between indecomposables given by its coefficient vector.
Morphism basic_morphism(const CategoryPresentation& P, Index i, Index j, Vector coords);
/// The b-th basis element of Hom(i, j).
Morphism basis_morphism(const CategoryPresentation& P, Index i, Index j, std::size_t b);
/// All basis elements of Hom(X, Y) as morphisms.
std::vector<Morphism> hom_basis(const CategoryPresentation& P, const Obj& X, const Obj& Y);
Morphism from_coords(const Obj& X, const Obj& Y, Vector coords);

/// g o f; throws ShapeError unless target(f) == source(g).
Morphism compose(const CategoryPresentation& P, const Morphism& g, const Morphism& f);
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, const Morphism& f);
Morphism negate(const Morphism& f);

/// Matrix of h |-> h o f from Hom(Y, Z) to Hom(X, Z), for f: X -> Y.
Matrix precompose_matrix(const CategoryPresentation& P, const Morphism& f, const Obj& Z);
/// Matrix of h |-> f o h from Hom(Z, X) to Hom(Z, Y), for f: X -> Y.
Matrix postcompose_matrix(const CategoryPresentation& P, const Morphism& f, const Obj& Z);

/// The same morphism viewed in the opposite category (Y -> X there).
Morphism op(const CategoryPresentation& P, const Morphism& f);

// Direct sums. Summands of X + Y are interleaved by indecomposable index,
// with the copies coming from X placed before those from Y.
Morphism inclusion_first(const CategoryPresentation& P, const Obj& X, const Obj& Y);
Morphism inclusion_second(const CategoryPresentation& P, const Obj& X, const Obj& Y);
Morphism projection_first(const CategoryPresentation& P, const Obj& X, const Obj& Y);
Morphism projection_second(const CategoryPresentation& P, const Obj& X, const Obj& Y);
/// [f, g]: X + Y -> Z.
Morphism copair(const CategoryPresentation& P, const Morphism& f, const Morphism& g);
/// (f, g)^T: Z -> X + Y.
Morphism pair(const CategoryPresentation& P, const Morphism& f, const Morphism& g);
/// Restriction of f to a sub-collection of its source slots (in slot order).
Morphism restrict_source(const CategoryPresentation& P, const Morphism& f,
                         const std::vector<std::size_t>& keep_slots);
/// Inclusion of the summand of X given by the listed slots.
Morphism slot_inclusion(const CategoryPresentation& P, const Obj& X,
                        const std::vector<std::size_t>& keep_slots);
Obj slots_object(const CategoryPresentation& P, const Obj& X,
                 const std::vector<std::size_t>& keep_slots);

/// Human-readable coefficient expansion in basis-morphism names.
std::string describe(const CategoryPresentation& P, const Morphism& f);

}  // namespace catloc
