#include "catloc/quotient.hpp"

#include "catloc/fincat.hpp"

namespace catloc {

IndexSet x_t_objects(const CategoryPresentation& P, const Obj& T) {
  IndexSet out;
  auto supp = T.support();
  for (Index i = 0; i < P.size(); ++i) {
    bool killed = true;
    for (auto t : supp)
      if (P.hom_dim(t, i) != 0) killed = false;
    if (killed) out.push_back(i);
  }
  return out;
}

Subspace factoring_subspace(const CategoryPresentation& P, const IndexSet& S, Index i, Index j) {
  const Field& F = P.field();
  const std::size_t dij = P.hom_dim(i, j);
  std::vector<Vector> span;
  for (auto x : S) {
    const std::size_t dix = P.hom_dim(i, x), dxj = P.hom_dim(x, j);
    for (std::size_t a = 0; a < dix; ++a) {
      Vector f = zero_vector(F, dix);
      f[a] = Scalar::one(F);
      for (std::size_t b = 0; b < dxj; ++b) {
        Vector g = zero_vector(F, dxj);
        g[b] = Scalar::one(F);
        Vector gf = P.compose(i, x, j, g, f);
        if (!is_zero_vector(gf)) span.push_back(std::move(gf));
      }
    }
  }
  return Subspace(F, dij, span);
}

QuotientCategory build_quotient_by(const CategoryPresentation& P, const IndexSet& S) {
  const std::size_t n = P.size();
  const Field& F = P.field();
  QuotientCategory Q{P, S, {}, CategoryPresentation(F, P.names())};
  Q.ideal.reserve(n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) Q.ideal.push_back(factoring_subspace(P, S, i, j));

  CategoryPresentation& R = Q.presentation;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) R.set_hom_dim(i, j, Q.factoring(i, j).codim());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const std::size_t dij = R.hom_dim(i, j);
      for (Index k = 0; k < n; ++k) {
        const std::size_t djk = R.hom_dim(j, k);
        if (dij == 0 || djk == 0 || R.hom_dim(i, k) == 0) continue;
        for (std::size_t a = 0; a < dij; ++a) {
          Vector qa = zero_vector(F, dij);
          qa[a] = Scalar::one(F);
          Vector fa = Q.factoring(i, j).lift(qa);
          for (std::size_t b = 0; b < djk; ++b) {
            Vector qb = zero_vector(F, djk);
            qb[b] = Scalar::one(F);
            Vector gb = Q.factoring(j, k).lift(qb);
            Vector c = Q.factoring(i, k).quotient_coords(P.compose(i, j, k, gb, fa));
            for (std::size_t m = 0; m < c.size(); ++m)
              if (!c[m].is_zero()) R.set_constant(i, j, k, a, b, m, c[m]);
          }
        }
      }
    }
  for (Index i = 0; i < n; ++i) R.set_identity(i, Q.factoring(i, i).quotient_coords(P.identity(i)));
  if (P.has_sigma()) R.set_sigma(*P.sigma_table());
  for (const auto& [alias, idx] : P.aliases()) R.add_alias(alias, idx);
  R.set_allows_zero_objects(true);
  R.metadata() = P.metadata();
  R.metadata().erase("two_calabi_yau");
  nlohmann::json killed = nlohmann::json::array();
  for (auto x : S) killed.push_back(P.name(x));
  R.metadata()["quotient_by"] = killed;
  return Q;
}

QuotientCategory build_quotient(const CategoryPresentation& P, const Obj& T, bool allow_nonrigid) {
  if (!allow_nonrigid && !is_rigid(P, T))
    throw NotRigid("object " + to_string(P, T) + " is not rigid");
  return build_quotient_by(P, x_t_objects(P, T));
}

Morphism project(const QuotientCategory& Q, const Morphism& f) {
  HomLayout Lp = hom_layout(Q.parent, f.src, f.dst);
  HomLayout Lq = hom_layout(Q.presentation, f.src, f.dst);
  if (Lp.dim != f.coords.size()) throw ShapeError("morphism does not match the parent category");
  Morphism out{f.src, f.dst, {}};
  out.coords.reserve(Lq.dim);
  for (std::size_t t = 0; t < Lp.dst_slots.size(); ++t)
    for (std::size_t s = 0; s < Lp.src_slots.size(); ++s) {
      auto block = std::span<const Scalar>(f.coords).subspan(Lp.block_offset(t, s), Lp.block_dim(t, s));
      Vector c = Q.factoring(Lp.src_slots[s], Lp.dst_slots[t]).quotient_coords(block);
      out.coords.insert(out.coords.end(), c.begin(), c.end());
    }
  return out;
}

Morphism lift(const QuotientCategory& Q, const Morphism& qf) {
  HomLayout Lp = hom_layout(Q.parent, qf.src, qf.dst);
  HomLayout Lq = hom_layout(Q.presentation, qf.src, qf.dst);
  if (Lq.dim != qf.coords.size()) throw ShapeError("morphism does not match the quotient category");
  Morphism out{qf.src, qf.dst, {}};
  out.coords.reserve(Lp.dim);
  for (std::size_t t = 0; t < Lq.dst_slots.size(); ++t)
    for (std::size_t s = 0; s < Lq.src_slots.size(); ++s) {
      auto block = std::span<const Scalar>(qf.coords).subspan(Lq.block_offset(t, s), Lq.block_dim(t, s));
      Vector c = Q.factoring(Lq.src_slots[s], Lq.dst_slots[t]).lift(block);
      out.coords.insert(out.coords.end(), c.begin(), c.end());
    }
  return out;
}

bool factors_through(const CategoryPresentation& P, const Morphism& f, const IndexSet& S) {
  HomLayout L = hom_layout(P, f.src, f.dst);
  if (L.dim != f.coords.size()) throw ShapeError("morphism does not match its endpoints");
  for (std::size_t t = 0; t < L.dst_slots.size(); ++t)
    for (std::size_t s = 0; s < L.src_slots.size(); ++s) {
      if (L.block_dim(t, s) == 0) continue;
      auto block = std::span<const Scalar>(f.coords).subspan(L.block_offset(t, s), L.block_dim(t, s));
      if (is_zero_vector(block)) continue;
      if (!factoring_subspace(P, S, L.src_slots[s], L.dst_slots[t]).contains(block)) return false;
    }
  return true;
}

}  // namespace catloc
