#include "catloc/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace catloc {

namespace {

void note(ValidationReport& r, const ValidationOptions& o, std::string msg) {
  if (r.violations.size() < o.max_violations) r.violations.push_back(std::move(msg));
}

Matrix left_multiplication(const CategoryPresentation& P, Index i, std::span<const Scalar> b) {
  const std::size_t d = P.hom_dim(i, i);
  Matrix L(P.field(), d, d);
  for (std::size_t c = 0; c < d; ++c) {
    Vector e = zero_vector(P.field(), d);
    e[c] = Scalar::one(P.field());
    Vector r = P.compose(i, i, i, b, e);
    for (std::size_t k = 0; k < d; ++k) L(k, c) = r[k];
  }
  return L;
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

}  // namespace

Subspace endo_radical(const CategoryPresentation& P, Index i) {
  const std::size_t d = P.hom_dim(i, i);
  if (d == 0) return Subspace(P.field(), 0);
  const Field& F = P.field();
  const Vector& unit = P.identity(i);
  std::vector<Vector> span;
  for (std::size_t b = 0; b < d; ++b) {
    Vector e = zero_vector(F, d);
    e[b] = Scalar::one(F);
    Matrix L = left_multiplication(P, i, e);
    auto shifted = [&](const Scalar& lambda) {
      Vector r = e;
      for (std::size_t k = 0; k < d; ++k) r[k] -= lambda * unit[k];
      return r;
    };
    std::optional<Vector> nil;
    if (F.is_rational() || d % F.characteristic() != 0) {
      Scalar tr = Scalar::zero(F);
      for (std::size_t k = 0; k < d; ++k) tr += L(k, k);
      Vector r = shifted(tr / Scalar::from_int(F, static_cast<long long>(d)));
      if (is_nilpotent(left_multiplication(P, i, r))) nil = std::move(r);
    } else {
      for (std::uint32_t v = 0; v < F.modulus() && !nil; ++v) {
        Vector r = shifted(Scalar::from_int(F, v));
        if (is_nilpotent(left_multiplication(P, i, r))) nil = std::move(r);
      }
    }
    if (!nil) throw std::domain_error("End(" + P.name(i) + ") is not local");
    span.push_back(std::move(*nil));
  }
  Subspace rad(F, d, span);
  if (rad.dim() + 1 != d) throw std::domain_error("End(" + P.name(i) + ") is not local");
  return rad;
}

bool in_radical(const CategoryPresentation& P, Index i, Index j, std::span<const Scalar> v) {
  if (i != j) return true;
  return endo_radical(P, i).contains(v);
}

ValidationReport validate_category(const CategoryPresentation& P, ValidationOptions opts) {
  ValidationReport rep;
  const std::size_t n = P.size();
  const Field& F = P.field();

  for (Index i = 0; i < n; ++i) {
    if (P.hom_dim(i, i) == 0 && !P.allows_zero_objects())
      note(rep, opts, "hom_dim(" + P.name(i) + "," + P.name(i) + ") = 0");
    for (Index j = 0; j < n; ++j) {
      // unit laws on every basis element of Hom(i, j)
      for (std::size_t a = 0; a < P.hom_dim(i, j); ++a) {
        Vector e = zero_vector(F, P.hom_dim(i, j));
        e[a] = Scalar::one(F);
        if (P.compose(i, j, j, P.identity(j), e) != e)
          note(rep, opts, "left unit fails on " + P.name(i) + "->" + P.name(j) + "#" + std::to_string(a));
        if (P.compose(i, i, j, e, P.identity(i)) != e)
          note(rep, opts, "right unit fails on " + P.name(i) + "->" + P.name(j) + "#" + std::to_string(a));
      }
    }
  }

  // (h g) f = h (g f) for basis f: i->j, g: j->k, h: k->l
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const std::size_t dij = P.hom_dim(i, j);
      if (dij == 0) continue;
      for (Index k = 0; k < n; ++k) {
        const std::size_t djk = P.hom_dim(j, k);
        if (djk == 0) continue;
        for (Index l = 0; l < n; ++l) {
          const std::size_t dkl = P.hom_dim(k, l);
          if (dkl == 0) continue;
          for (std::size_t a = 0; a < dij; ++a) {
            Vector f = zero_vector(F, dij);
            f[a] = Scalar::one(F);
            for (std::size_t b = 0; b < djk; ++b) {
              Vector g = zero_vector(F, djk);
              g[b] = Scalar::one(F);
              Vector gf = P.compose(i, j, k, g, f);
              for (std::size_t c = 0; c < dkl; ++c) {
                Vector h = zero_vector(F, dkl);
                h[c] = Scalar::one(F);
                ++rep.checked_triples;
                if (P.compose(i, j, l, P.compose(j, k, l, h, g), f) != P.compose(i, k, l, h, gf)) {
                  std::ostringstream os;
                  os << "associativity fails for (" << P.name(i) << "," << P.name(j) << ","
                     << P.name(k) << "," << P.name(l) << ") basis (" << a << "," << b << "," << c << ")";
                  note(rep, opts, os.str());
                }
              }
            }
          }
        }
      }
    }

  if (opts.krull_schmidt && rep.ok()) {
    std::vector<std::optional<Subspace>> rads(n);
    for (Index i = 0; i < n; ++i) {
      try {
        rads[i] = endo_radical(P, i);
      } catch (const std::domain_error& e) {
        note(rep, opts, e.what());
      }
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        if (i == j || !rads[i] || P.hom_dim(i, i) == 0) continue;
        for (std::size_t a = 0; a < P.hom_dim(i, j); ++a)
          for (std::size_t b = 0; b < P.hom_dim(j, i); ++b) {
            Vector f = zero_vector(F, P.hom_dim(i, j));
            f[a] = Scalar::one(F);
            Vector g = zero_vector(F, P.hom_dim(j, i));
            g[b] = Scalar::one(F);
            if (!rads[i]->contains(P.compose(i, j, i, g, f)))
              note(rep, opts, "indecomposables " + P.name(i) + " and " + P.name(j) + " are isomorphic");
          }
      }
  }

  if (P.has_sigma()) {
    for (Index i = 0; i < n; ++i)
      if (P.sigma_inv(P.sigma(i)) != i) note(rep, opts, "suspension table is not a bijection");
    if (P.metadata().value("two_calabi_yau", false)) {
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          if (P.hom_dim(x, y) != P.hom_dim(y, P.sigma(P.sigma(x))))
            note(rep, opts, "2-CY symmetry fails for (" + P.name(x) + "," + P.name(y) + ")");
    }
  }
  return rep;
}

IndexSet perp(const CategoryPresentation& P, const IndexSet& S, Side side) {
  if (!P.has_sigma()) throw MissingSuspension("perp needs the suspension permutation");
  IndexSet out;
  for (Index c = 0; c < P.size(); ++c) {
    bool ok = true;
    for (auto x : S) {
      const std::size_t ext = side == Side::kRight ? P.hom_dim(x, P.sigma(c)) : P.hom_dim(c, P.sigma(x));
      if (ext != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

bool is_rigid(const CategoryPresentation& P, const Obj& T) {
  if (!P.has_sigma()) throw MissingSuspension("rigidity needs the suspension permutation");
  auto supp = T.support();
  for (auto t : supp)
    for (auto u : supp)
      if (P.hom_dim(t, P.sigma(u)) != 0) return false;
  return true;
}

bool is_cluster_tilting(const CategoryPresentation& P, const Obj& T) {
  return perp(P, T.support(), Side::kRight) == T.support();
}

bool has_approximation_property(const CategoryPresentation& P, const IndexSet& S, const Morphism& a,
                                Side side) {
  for (auto x : S) {
    Obj X = Obj::indecomposable(P.size(), x);
    if (side == Side::kRight) {
      Matrix m = postcompose_matrix(P, a, X);
      if (rank(m) != m.rows()) return false;
    } else {
      Matrix m = precompose_matrix(P, a, X);
      if (rank(m) != m.rows()) return false;
    }
  }
  return true;
}

Morphism approximation(const CategoryPresentation& P, const IndexSet& S, const Obj& C, Side side,
                       DeletionOrder order) {
  if (side == Side::kLeft) {
    CategoryPresentation Pop = P.opposite();
    Morphism a = approximation(Pop, S, C, Side::kRight, order);
    return op(Pop, a);
  }
  // Start from every basis map x -> C, x in S: X0 = sum_x x^{dim Hom(x, C)}.
  Obj X0 = Obj::zero(P.size());
  for (auto x : S) X0.mult[x] = hom_dim(P, Obj::indecomposable(P.size(), x), C);
  HomLayout L = hom_layout(P, X0, C);
  Morphism a{X0, C, zero_vector(P.field(), L.dim)};
  {
    // copy k of x carries the k-th basis element of Hom(x, C)
    std::size_t s = 0;
    for (Index x = 0; x < P.size(); ++x)
      for (std::size_t k = 0; k < X0.mult[x]; ++k, ++s) {
        std::size_t seen = 0;
        for (std::size_t t = 0; t < L.dst_slots.size(); ++t)
          for (std::size_t b = 0; b < L.block_dim(t, s); ++b, ++seen)
            if (seen == k) a.coords[L.block_offset(t, s) + b] = Scalar::one(P.field());
      }
  }
  std::vector<std::size_t> keep(X0.total());
  for (std::size_t s = 0; s < keep.size(); ++s) keep[s] = s;
  std::vector<std::size_t> attempt = keep;
  if (order == DeletionOrder::kReverse) std::reverse(attempt.begin(), attempt.end());
  for (auto victim : attempt) {
    std::vector<std::size_t> trial;
    for (auto s : keep)
      if (s != victim) trial.push_back(s);
    if (has_approximation_property(P, S, restrict_source(P, a, trial), Side::kRight)) keep = trial;
  }
  return restrict_source(P, a, keep);
}

IndexSet nonzero_indecomposables(const CategoryPresentation& P) {
  IndexSet out;
  for (Index i = 0; i < P.size(); ++i)
    if (!P.is_zero_object(i)) out.push_back(i);
  return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace catloc
