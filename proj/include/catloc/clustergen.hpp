#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catloc/category.hpp"

namespace catloc {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quiver whose underlying graph is the path 1 - 2 - ... - n. orientation[k]
/// describes the arrow between vertices k+1 and k+2 (1-based): 'L' is k+1 <- k+2,
/// 'R' is k+1 -> k+2.
struct QuiverAn {
  std::size_t n = 1;
  std::string orientation;

  struct Arrow {
    Index src;
    Index tgt;
  };

  /// 1 <- 2 <- ... <- n.
  static QuiverAn linear(std::size_t n);
  /// Validates length and letters; throws std::invalid_argument.
  static QuiverAn parse(std::size_t n, const std::string& orientation);

  std::size_t arrow_count() const { return n == 0 ? 0 : n - 1; }
  /// Arrow k joins 0-based vertices k and k+1.
  Arrow arrow(std::size_t k) const;
};

struct Rep {
  std::vector<std::size_t> dim;
  std::vector<Matrix> arrows;  // arrows[k] is dim[tgt] x dim[src]

  std::size_t total() const;
};

/// A morphism of representations: one matrix per vertex.
using RepHom = std::vector<Matrix>;

/// Interval module supported on 0-based vertices a..b.
Rep interval_rep(const QuiverAn& Q, const Field& F, std::size_t a, std::size_t b);
/// All interval modules, ordered by (a, b).
std::vector<Rep> indecomposable_reps(const QuiverAn& Q, const Field& F);

/// Support interval of an interval module.
std::pair<std::size_t, std::size_t> interval_of(const Rep& M);

Rep projective_rep(const QuiverAn& Q, const Field& F, Index v);
Rep injective_rep(const QuiverAn& Q, const Field& F, Index v);

std::vector<RepHom> hom_rep(const QuiverAn& Q, const Field& F, const Rep& M, const Rep& N);
RepHom compose_rep(const RepHom& g, const RepHom& f);
std::size_t ext1_rep(const QuiverAn& Q, const Field& F, const Rep& M, const Rep& N);

/// Coxeter transformation on dimension vectors: dim tau M for non-projective indecomposable M.
std::vector<long long> coxeter(const QuiverAn& Q, const std::vector<long long>& d);
std::vector<long long> coxeter_inverse(const QuiverAn& Q, const std::vector<long long>& d);

/// AR translate; nullopt for projectives (tau) or injectives (tau_inv).
std::optional<Rep> tau(const QuiverAn& Q, const Field& F, const Rep& M);
std::optional<Rep> tau_inv(const QuiverAn& Q, const Field& F, const Rep& M);

/// Diagonals of the (n+3)-gon with vertices 0..n+2.
struct DiagonalModel {
  std::size_t n = 0;
  std::size_t polygon = 3;
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;  // a < b

  static DiagonalModel build(std::size_t n);
  std::optional<Index> find(std::size_t a, std::size_t b) const;
  /// Rotate both endpoints by k steps.
  Index rotate(Index d, long k) const;
  /// Interior crossing.
  bool crosses(Index d, Index e) const;
  /// Suspension: rotation by -1.
  Index sigma(Index d) const { return rotate(d, -1); }
};

/// table[a][b] = dim Hom(a, b) = [a crosses the rotation of b by +1].
std::vector<std::vector<std::size_t>> diagonal_dimension_oracle(std::size_t n);

/// A finite stable translation quiver without multiple arrows.
struct TranslationQuiver {
  std::vector<std::string> names;
  std::vector<std::pair<Index, Index>> arrows;
  std::vector<Index> sigma;

  bool has_arrow(Index x, Index y) const;
};

/// Vertex, arrow and translation data of the AR quiver of C(A_n), in the object
/// order of build_cluster_category.
struct ClusterQuiverData {
  QuiverAn quiver;
  std::vector<Rep> modules;
  TranslationQuiver ar;
  std::vector<std::vector<std::string>> aliases;
};
ClusterQuiverData cluster_ar_quiver(const QuiverAn& Q, const Field& F);

/// The diagonal model as a translation quiver: arrows move one endpoint by +1.
TranslationQuiver diagonal_translation_quiver(const DiagonalModel& D);

/// An isomorphism of translation quivers a -> b, if any.
std::optional<std::vector<Index>> translation_quiver_isomorphism(const TranslationQuiver& a,
                                                                 const TranslationQuiver& b);

/// Mesh category of a translation quiver as a presentation. Hom spaces are graded
/// by path length; basis elements are paths. Throws GenerationError when some
/// graded piece does not vanish within max_length.
CategoryPresentation mesh_category(const TranslationQuiver& G, const Field& F, std::size_t max_length = 64);

/// dim Hom in the cluster category from module data: Hom_D(X, Y) + Hom_D(X, tau^{-1} Sigma Y)
/// evaluated case by case on modules and shifted projectives.
std::vector<std::vector<std::size_t>> fundamental_domain_dimensions(const ClusterQuiverData& data,
                                                                    const Field& F);

/// C(A_n) for the given orientation: the mesh category of its AR quiver, checked
/// against the diagonal oracle, the fundamental-domain dimensions, 2-CY symmetry
/// and validate_category. Objects are the interval modules ordered by support,
/// then Sigma P_1, ..., Sigma P_n.
CategoryPresentation build_cluster_category(std::size_t n, const std::string& orientation, const Field& F);

}  // namespace catloc
