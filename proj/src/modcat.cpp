#include "catloc/modcat.hpp"

#include <algorithm>
#include <random>

#include "catloc/fincat.hpp"

namespace catloc {

namespace {

Vector vec(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

void record(PropertyCheck& c, bool holds, const std::string& witness) {
  ++c.instances;
  if (holds) return;
  ++c.failures;
  if (c.counterexamples.size() < 8) c.counterexamples.push_back(witness);
}

/// Columns vec(H(b)) over the basis b of Hom(X, Y).
Matrix h_matrix(const CategoryPresentation& P, const Obj& T, const Obj& X, const Obj& Y) {
  const std::size_t rows = hom_dim(P, T, Y) * hom_dim(P, T, X);
  std::vector<Vector> cols;
  for (const auto& b : hom_basis(P, X, Y)) cols.push_back(vec(h_mor(P, T, b).matrix));
  return Matrix::from_columns(P.field(), rows, cols);
}

Morphism combination(const Obj& X, const Obj& Y, const std::vector<Scalar>& c) {
  return from_coords(X, Y, Vector(c.begin(), c.end()));
}

/// A summand T' of T0 and a fraction X => T' that is invertible after localising.
std::optional<std::pair<Obj, Fraction>> localised_iso_into(const QuotientCategory& Q, const Obj& T, const Obj& X,
                                                            const Obj& T0, const EquivalenceBudget& budget);

}  // namespace

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
  Vector out = zero_vector(field, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (a[k].is_zero()) continue;
    Vector col = left_mult[k] * b;
    for (std::size_t m = 0; m < dim; ++m) out[m] += a[k] * col[m];
  }
  return out;
}

bool Algebra::validate() const {
  for (std::size_t a = 0; a < dim; ++a) {
    Vector ea = zero_vector(field, dim);
    ea[a] = Scalar::one(field);
    if (multiply(unit, ea) != ea || multiply(ea, unit) != ea) return false;
    for (std::size_t b = 0; b < dim; ++b) {
      Vector eb = zero_vector(field, dim);
      eb[b] = Scalar::one(field);
      Vector ab = multiply(ea, eb);
      for (std::size_t c = 0; c < dim; ++c) {
        Vector ec = zero_vector(field, dim);
        ec[c] = Scalar::one(field);
        if (multiply(ab, ec) != multiply(ea, multiply(eb, ec))) return false;
      }
    }
  }
  return true;
}

bool GammaModule::validate(const Algebra& G) const {
  if (action.size() != G.dim) return false;
  auto act = [&](const Vector& a) {
    Matrix m(G.field, dim, dim);
    for (std::size_t k = 0; k < G.dim; ++k)
      if (!a[k].is_zero()) {
        Matrix s = action[k];
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c) s(r, c) = a[k] * s(r, c);
        m = m + s;
      }
    return m;
  };
  if (!(act(G.unit) == Matrix::identity(G.field, dim))) return false;
  for (std::size_t a = 0; a < G.dim; ++a)
    for (std::size_t b = 0; b < G.dim; ++b) {
      Vector ea = zero_vector(G.field, G.dim), eb = zero_vector(G.field, G.dim);
      ea[a] = Scalar::one(G.field);
      eb[b] = Scalar::one(G.field);
      if (!(act(G.multiply(ea, eb)) == action[a] * action[b])) return false;
    }
  return true;
}

bool ModuleMap::commutes(const GammaModule& M, const GammaModule& N) const {
  if (matrix.cols() != M.dim || matrix.rows() != N.dim) return false;
  for (std::size_t k = 0; k < M.action.size(); ++k)
    if (!(N.action[k] * matrix == matrix * M.action[k])) return false;
  return true;
}

Algebra endomorphism_algebra(const CategoryPresentation& P, const Obj& T) {
  Algebra G;
  G.field = P.field();
  const auto basis = hom_basis(P, T, T);
  G.dim = basis.size();
  for (const auto& b : basis) G.labels.push_back(describe(P, b));
  for (const auto& a : basis) {
    // b -> a * b = b o a is precomposition with a.
    G.left_mult.push_back(precompose_matrix(P, a, T));
  }
  G.unit = identity(P, T).coords;
  return G;
}

GammaModule h_object(const CategoryPresentation& P, const Obj& T, const Obj& X) {
  GammaModule M;
  M.object = X;
  M.dim = hom_dim(P, T, X);
  for (const auto& e : hom_basis(P, T, T)) M.action.push_back(precompose_matrix(P, e, X));
  return M;
}

ModuleMap h_mor(const CategoryPresentation& P, const Obj& T, const Morphism& f) {
  return ModuleMap{postcompose_matrix(P, f, T)};
}

bool in_s(const CategoryPresentation& P, const Obj& T, const Morphism& f) {
  Matrix m = h_mor(P, T, f).matrix;
  return m.rows() == m.cols() && rank(m) == m.rows();
}

ModuleMap h_fraction(const QuotientCategory& Q, const Obj& T, const Fraction& F) {
  const CategoryPresentation& P = Q.parent;
  Matrix hr = h_mor(P, T, lift(Q, F.r)).matrix;
  auto inv = inverse(hr);
  if (!inv) throw NotInS("denominator " + describe(Q.presentation, F.r) + " is not inverted by H");
  return ModuleMap{h_mor(P, T, lift(Q, F.f)).matrix * *inv};
}

std::vector<ModuleMap> module_hom_space(const GammaModule& M, const GammaModule& N) {
  const Field F = M.action.empty() ? (N.action.empty() ? Field::rationals() : N.action[0].field())
                                   : M.action[0].field();
  const std::size_t m = M.dim, n = N.dim;
  if (m == 0 || n == 0) return {};
  // phi is n x m, unknown index r * m + c; equations N_e phi - phi M_e = 0.
  Matrix eq(F, M.action.size() * n * m, n * m);
  for (std::size_t e = 0; e < M.action.size(); ++e) {
    const Matrix& A = N.action[e];
    const Matrix& B = M.action[e];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t row = (e * n + r) * m + c;
        for (std::size_t q = 0; q < n; ++q) eq(row, q * m + c) += A(r, q);
        for (std::size_t q = 0; q < m; ++q) eq(row, r * m + q) -= B(q, c);
      }
  }
  std::vector<ModuleMap> out;
  for (const auto& v : kernel_basis(eq)) {
    Matrix phi(F, n, m);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) phi(r, c) = v[r * m + c];
    out.push_back(ModuleMap{std::move(phi)});
  }
  return out;
}

std::optional<Fraction> realise_module_map(const QuotientCategory& Q, const Obj& T, const Obj& X, const Obj& Y,
                                           const ModuleMap& phi, const EquivalenceBudget& budget) {
  const CategoryPresentation& P = Q.parent;
  const CategoryPresentation& R = Q.presentation;
  const Field& F = P.field();
  const std::size_t hx = hom_dim(P, T, X);

  auto attempt = [&](const Morphism& r) -> std::optional<Fraction> {
    Matrix hr = h_mor(P, T, r).matrix;
    if (hr.rows() != hr.cols() || rank(hr) != hr.rows()) return std::nullopt;
    Matrix target = phi.matrix * hr;
    auto c = solve(h_matrix(P, T, r.src, Y), vec(target));
    if (!c) return std::nullopt;
    Morphism f = from_coords(r.src, Y, std::move(*c));
    Morphism qr = project(Q, r);
    if (!is_regular(R, qr)) return std::nullopt;
    return Fraction{qr, project(Q, f)};
  };

  if (auto fr = attempt(identity(P, X))) return fr;

  const IndexSet nz = nonzero_indecomposables(R);
  std::vector<std::size_t> bound(P.size(), 0);
  for (auto i : nz) bound[i] = hom_dim(R, Obj::indecomposable(P.size(), i), X);
  std::vector<Obj> cands{Obj::zero(P.size())};
  for (auto i : nz) {
    std::vector<Obj> next;
    for (const auto& c : cands)
      for (std::size_t m = 0; m <= bound[i]; ++m) {
        Obj o = c;
        o.mult[i] = m;
        next.push_back(std::move(o));
        if (next.size() > 64 * budget.max_aux_objects) break;
      }
    cands = std::move(next);
  }
  std::erase_if(cands, [&](const Obj& A) { return A.is_zero() || hom_dim(P, T, A) != hx || A == X; });
  std::stable_sort(cands.begin(), cands.end(), [](const Obj& a, const Obj& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  if (cands.size() > budget.max_aux_objects) cands.resize(budget.max_aux_objects);

  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (const auto& A : cands) {
    const std::size_t d = hom_dim(P, A, X);
    if (d == 0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Scalar> c(d, Scalar::zero(F));
      c[k] = Scalar::one(F);
      if (auto fr = attempt(combination(A, X, c))) return fr;
    }
    for (std::size_t t = 0; t < budget.tries_per_object; ++t) {
      std::vector<Scalar> c;
      for (std::size_t k = 0; k < d; ++k) c.push_back(Scalar::from_int(F, dist(rng)));
      if (auto fr = attempt(combination(A, X, c))) return fr;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<std::pair<Obj, Fraction>> localised_iso_into(const QuotientCategory& Q, const Obj& T, const Obj& X,
                                                            const Obj& T0, const EquivalenceBudget& budget) {
  const CategoryPresentation& P = Q.parent;
  const CategoryPresentation& R = Q.presentation;
  const Field& F = P.field();
  const GammaModule HX = h_object(P, T, X);
  std::vector<Obj> subs{Obj::zero(P.size())};
  for (Index i = 0; i < P.size(); ++i) {
    std::vector<Obj> next;
    for (const auto& o : subs)
      for (std::size_t m = 0; m <= T0.mult[i]; ++m) {
        Obj u = o;
        u.mult[i] = m;
        next.push_back(std::move(u));
      }
    subs = std::move(next);
  }
  std::stable_sort(subs.begin(), subs.end(), [](const Obj& a, const Obj& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (const auto& S : subs) {
    if (S.is_zero() || hom_dim(P, T, S) != HX.dim) continue;
    const GammaModule HS = h_object(P, T, S);
    const auto maps = module_hom_space(HX, HS);
    const auto back = module_hom_space(HS, HX);
    if (maps.empty() || back.empty()) continue;
    for (std::size_t t = 0; t < maps.size() + budget.tries_per_object; ++t) {
      Matrix psi(F, HS.dim, HX.dim);
      if (t < maps.size()) {
        psi = maps[t].matrix;
      } else {
        for (const auto& m : maps) {
          const Scalar c = Scalar::from_int(F, dist(rng));
          for (std::size_t r = 0; r < psi.rows(); ++r)
            for (std::size_t q = 0; q < psi.cols(); ++q) psi(r, q) += c * m.matrix(r, q);
        }
      }
      auto psi_inv = inverse(psi);
      if (!psi_inv) continue;
      auto there = realise_module_map(Q, T, X, S, ModuleMap{psi}, budget);
      auto home = realise_module_map(Q, T, S, X, ModuleMap{*psi_inv}, budget);
      if (!there || !home) continue;
      if (fractions_equal(R, compose_fractions(R, *home, *there), identity_fraction(R, X)) &&
          fractions_equal(R, compose_fractions(R, *there, *home), identity_fraction(R, S)))
        return std::make_pair(S, *there);
    }
  }
  return std::nullopt;
}

}  // namespace

EquivalenceReport verify_equivalence(const QuotientCategory& Q, const Obj& T, const EquivalenceBudget& budget) {
  EquivalenceReport rep;
  const CategoryPresentation& P = Q.parent;
  const CategoryPresentation& R = Q.presentation;
  const std::size_t n = P.size();
  auto ind = [&](Index i) { return Obj::indecomposable(n, i); };

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (P.hom_dim(i, j) == 0) continue;
      Matrix h = h_matrix(P, T, ind(i), ind(j));
      Subspace ker(P.field(), P.hom_dim(i, j), kernel_basis(h));
      const Subspace& fac = Q.factoring(i, j);
      bool same = ker.dim() == fac.dim();
      for (const auto& v : fac.basis()) same = same && ker.contains(v);
      record(rep.faithful, same, "Hom(" + P.name(i) + "," + P.name(j) + "): dim ker H = " +
                                     std::to_string(ker.dim()) + ", dim factoring = " + std::to_string(fac.dim()));
    }

  std::vector<std::pair<Index, Index>> pairs = budget.pairs;
  if (pairs.empty())
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<GammaModule> H;
  for (Index i = 0; i < n; ++i) H.push_back(h_object(P, T, ind(i)));
  for (auto [i, j] : pairs) {
    for (const auto& phi : module_hom_space(H[i], H[j])) {
      const std::string w = "module map H(" + P.name(i) + ") -> H(" + P.name(j) + ")";
      auto fr = realise_module_map(Q, T, ind(i), ind(j), phi, budget);
      bool ok = fr.has_value() && h_fraction(Q, T, *fr).matrix == phi.matrix;
      record(rep.full, ok, w);
      if (ok && !is_iso(R, fr->r)) {
        ++rep.non_identity_denominators;
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(describe(R, *fr));
      }
    }
  }

  const IndexSet tsupp = T.support();
  for (auto i : nonzero_indecomposables(R)) {
    const Obj X = ind(i);
    Morphism a = approximation(P, tsupp, X, Side::kRight);
    GammaModule H0 = h_object(P, T, a.src);
    Matrix ha = h_mor(P, T, a).matrix;
    auto psis = module_hom_space(H[i], H0);
    std::vector<Vector> cols;
    for (const auto& psi : psis) cols.push_back(vec(ha * psi.matrix));
    bool splits = false;
    std::optional<ModuleMap> section;
    if (!cols.empty()) {
      Matrix m = Matrix::from_columns(P.field(), H[i].dim * H[i].dim, cols);
      if (auto c = solve(m, vec(Matrix::identity(P.field(), H[i].dim)))) {
        Matrix s(P.field(), H0.dim, H[i].dim);
        for (std::size_t k = 0; k < psis.size(); ++k)
          for (std::size_t r = 0; r < s.rows(); ++r)
            for (std::size_t q = 0; q < s.cols(); ++q) s(r, q) += (*c)[k] * psis[k].matrix(r, q);
        section = ModuleMap{s};
        splits = true;
      }
    }
    const bool in_add_t = std::find(tsupp.begin(), tsupp.end(), i) != tsupp.end();
    bool certified = !splits && !in_add_t;
    std::string detail;
    if (splits) {
      // The section realised as a fraction must split [a]; X is then isomorphic,
      // after localising, to a summand of T_0.
      auto fr = realise_module_map(Q, T, X, a.src, *section, budget);
      const bool split = fr.has_value() && fractions_equal(R, compose_fractions(R, from_morphism(R, project(Q, a)), *fr),
                                                          identity_fraction(R, X));
      auto iso = split ? localised_iso_into(Q, T, X, a.src, budget) : std::nullopt;
      certified = iso.has_value();
      detail = certified ? " ~ " + to_string(P, iso->first) : ", no isomorphism with a summand of T_0 found";
      if (certified && !(iso->first == X) && rep.isomorphisms.size() < 16)
        rep.isomorphisms.push_back(P.name(i) + " ~ " + to_string(P, iso->first) + " via " + describe(R, iso->second));
    }
    record(rep.projectives, certified,
           P.name(i) + (splits ? " is" : " is not") + " projective after localising" + detail);
  }

  const GammaModule HT = h_object(P, T, T);
  record(rep.end_dimension, hom_dim(P, T, T) == module_hom_space(HT, HT).size(),
         "dim End(T) = " + std::to_string(hom_dim(P, T, T)));
  return rep;
}

}  // namespace catloc
