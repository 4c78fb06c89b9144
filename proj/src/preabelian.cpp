#include "catloc/preabelian.hpp"

#include <algorithm>
#include <random>

#include "catloc/fincat.hpp"

namespace catloc {

namespace {

Obj ind(const CategoryPresentation& P, Index i) { return Obj::indecomposable(P.size(), i); }

bool injective(const Matrix& m) { return rank(m) == m.cols(); }
bool surjective(const Matrix& m) { return rank(m) == m.rows(); }

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

Matrix negated(const Matrix& a) { return Matrix(a.field(), a.rows(), a.cols()) - a; }

/// Basis of rad(j, z) as morphisms between indecomposables.
std::vector<Morphism> radical_basis(const CategoryPresentation& P, Index j, Index z,
                                    const std::vector<Subspace>& endo_rad) {
  std::vector<Morphism> out;
  if (j != z) {
    for (std::size_t b = 0; b < P.hom_dim(j, z); ++b) out.push_back(basis_morphism(P, j, z, b));
  } else {
    for (const auto& v : endo_rad[z].basis()) out.push_back(basic_morphism(P, j, z, v));
  }
  return out;
}

std::vector<Subspace> all_endo_radicals(const CategoryPresentation& P) {
  std::vector<Subspace> out;
  out.reserve(P.size());
  for (Index i = 0; i < P.size(); ++i) out.push_back(endo_radical(P, i));
  return out;
}

std::optional<Cokernel> cover_cokernel(const CategoryPresentation& P, const Morphism& f, std::string* why) {
  const Field& F = P.field();
  const std::size_t n = P.size();
  const Obj& Y = f.dst;
  const IndexSet nz = nonzero_indecomposables(P);
  const auto endo_rad = all_endo_radicals(P);

  std::vector<std::vector<Morphism>> kbasis(n);
  std::vector<std::size_t> amb(n, 0);
  for (auto z : nz) {
    Matrix m = precompose_matrix(P, f, ind(P, z));
    amb[z] = m.cols();
    for (auto& v : kernel_basis(m)) kbasis[z].push_back(from_coords(Y, ind(P, z), std::move(v)));
  }

  Obj M = Obj::zero(n);
  Vector coords;
  for (auto z : nz) {
    if (kbasis[z].empty()) continue;
    std::vector<Vector> span;
    for (auto j : nz)
      for (const auto& g : radical_basis(P, j, z, endo_rad))
        for (const auto& k : kbasis[j]) {
          Morphism gk = compose(P, g, k);
          if (!gk.is_zero()) span.push_back(std::move(gk.coords));
        }
    Subspace acc(F, amb[z], span);
    for (const auto& k : kbasis[z]) {
      if (acc.contains(k.coords)) continue;
      span.push_back(k.coords);
      acc = Subspace(F, amb[z], span);
      M.mult[z] += 1;
      coords.insert(coords.end(), k.coords.begin(), k.coords.end());
    }
  }
  if (coords.empty()) coords = zero_vector(F, hom_dim(P, Y, M));
  Morphism c = from_coords(Y, M, std::move(coords));
  if (is_cokernel_map(P, f, c)) return Cokernel{M, c};
  if (why) {
    *why = "no cokernel of " + describe(P, f) + ": the only candidate object " + to_string(P, M) +
           " fails the universal property";
    for (auto z : nz) {
      std::size_t hm = hom_dim(P, M, ind(P, z));
      if (hm != kbasis[z].size())
        *why += "; dim Hom(" + to_string(P, M) + "," + P.name(z) + ")=" + std::to_string(hm) +
                " but dim K(" + P.name(z) + ")=" + std::to_string(kbasis[z].size());
    }
  }
  return std::nullopt;
}

Morphism op_back(const CategoryPresentation& Pop, const Morphism& g) { return op(Pop, g); }

/// Coefficient vectors of the candidate map space, enumerated or sampled.
class CandidateMaps {
 public:
  CandidateMaps(const Field& F, const std::vector<Vector>& basis, std::size_t amb, const SearchOptions& o,
                std::mt19937_64& rng)
      : F_(F), basis_(basis), amb_(amb), opts_(o), rng_(rng) {
    exhaustive_ = false;
    if (!F.is_rational()) {
      std::size_t total = 1;
      bool small = true;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (total > o.exhaustive_limit / F.modulus()) {
          small = false;
          break;
        }
        total *= F.modulus();
      }
      exhaustive_ = small;
      digits_.assign(basis.size(), 0);
    }
  }

  bool exhaustive() const { return exhaustive_; }

  std::optional<Vector> next() {
    if (exhaustive_) {
      if (done_) return std::nullopt;
      Vector v = combine([&](std::size_t k) { return Scalar::from_int(F_, digits_[k]); });
      std::size_t k = 0;
      for (; k < digits_.size(); ++k) {
        if (++digits_[k] < static_cast<long>(F_.modulus())) break;
        digits_[k] = 0;
      }
      if (k == digits_.size()) done_ = true;
      return v;
    }
    if (tries_++ >= opts_.retries) return std::nullopt;
    if (F_.is_rational()) {
      std::uniform_int_distribution<int> dist(-opts_.coefficient_range, opts_.coefficient_range);
      return combine([&](std::size_t) { return Scalar::from_int(F_, dist(rng_)); });
    }
    std::uniform_int_distribution<long> dist(0, static_cast<long>(F_.modulus()) - 1);
    return combine([&](std::size_t) { return Scalar::from_int(F_, dist(rng_)); });
  }

 private:
  template <class Coef>
  Vector combine(Coef coef) {
    Vector v = zero_vector(F_, amb_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Scalar s = coef(k);
      if (s.is_zero()) continue;
      for (std::size_t r = 0; r < amb_; ++r)
        if (!basis_[k][r].is_zero()) v[r] = v[r] + s * basis_[k][r];
    }
    return v;
  }

  const Field& F_;
  const std::vector<Vector>& basis_;
  std::size_t amb_;
  const SearchOptions& opts_;
  std::mt19937_64& rng_;
  bool exhaustive_ = false;
  bool done_ = false;
  std::vector<long> digits_;
  std::size_t tries_ = 0;
};

}  // namespace

bool is_epi(const CategoryPresentation& P, const Morphism& f) {
  for (auto z : nonzero_indecomposables(P))
    if (!injective(precompose_matrix(P, f, ind(P, z)))) return false;
  return true;
}

bool is_mono(const CategoryPresentation& P, const Morphism& f) {
  for (auto z : nonzero_indecomposables(P))
    if (!injective(postcompose_matrix(P, f, ind(P, z)))) return false;
  return true;
}

bool is_regular(const CategoryPresentation& P, const Morphism& f) { return is_epi(P, f) && is_mono(P, f); }

std::optional<Morphism> inverse_morphism(const CategoryPresentation& P, const Morphism& f) {
  Matrix m = precompose_matrix(P, f, f.src);
  auto g = solve(m, identity(P, f.src).coords);
  if (!g) return std::nullopt;
  Morphism inv = from_coords(f.dst, f.src, std::move(*g));
  if (!(compose(P, f, inv) == identity(P, f.dst))) return std::nullopt;
  return inv;
}

bool is_iso(const CategoryPresentation& P, const Morphism& f) { return inverse_morphism(P, f).has_value(); }

bool is_cokernel_map(const CategoryPresentation& P, const Morphism& f, const Morphism& c) {
  if (!(c.src == f.dst)) return false;
  if (!compose(P, c, f).is_zero()) return false;
  for (auto z : nonzero_indecomposables(P)) {
    Matrix mc = precompose_matrix(P, c, ind(P, z));
    Matrix mf = precompose_matrix(P, f, ind(P, z));
    const std::size_t rc = rank(mc);
    if (rc != mc.cols() || rc != mf.cols() - rank(mf)) return false;
  }
  return true;
}

bool is_kernel_map(const CategoryPresentation& P, const Morphism& f, const Morphism& j) {
  if (!(j.dst == f.src)) return false;
  if (!compose(P, f, j).is_zero()) return false;
  for (auto z : nonzero_indecomposables(P)) {
    Matrix mj = postcompose_matrix(P, j, ind(P, z));
    Matrix mf = postcompose_matrix(P, f, ind(P, z));
    const std::size_t rj = rank(mj);
    if (rj != mj.cols() || rj != mf.cols() - rank(mf)) return false;
  }
  return true;
}

std::optional<Cokernel> try_cokernel(const CategoryPresentation& P, const Morphism& f) {
  return cover_cokernel(P, f, nullptr);
}

Cokernel cokernel(const CategoryPresentation& P, const Morphism& f) {
  std::string why;
  auto r = cover_cokernel(P, f, &why);
  if (!r) throw NoCokernel(why);
  return *r;
}

std::optional<Kernel> try_kernel(const CategoryPresentation& P, const Morphism& f) {
  CategoryPresentation Pop = P.opposite();
  auto r = cover_cokernel(Pop, op(P, f), nullptr);
  if (!r) return std::nullopt;
  return Kernel{r->obj, op_back(Pop, r->map)};
}

Kernel kernel(const CategoryPresentation& P, const Morphism& f) {
  CategoryPresentation Pop = P.opposite();
  std::string why;
  auto r = cover_cokernel(Pop, op(P, f), &why);
  if (!r) {
    auto pos = why.find("no cokernel");
    if (pos != std::string::npos) why.replace(pos, 11, "no kernel");
    throw NoKernel(why + " (computed in the opposite category)");
  }
  return Kernel{r->obj, op_back(Pop, r->map)};
}

Cokernel cokernel_search(const CategoryPresentation& P, const Morphism& f, const SearchOptions& opts) {
  const std::size_t n = P.size();
  const IndexSet nz = nonzero_indecomposables(P);
  const Obj& Y = f.dst;

  std::vector<std::size_t> bound(n, 0), kdim(n, 0);
  double combos = 1;
  for (auto z : nz) {
    Matrix m = precompose_matrix(P, f, ind(P, z));
    bound[z] = m.cols();
    kdim[z] = m.cols() - rank(m);
    combos *= static_cast<double>(bound[z] + 1);
  }
  if (combos > static_cast<double>(opts.candidate_ceiling))
    throw BoundsExceeded("cokernel search for " + describe(P, f) + " needs " + std::to_string(combos) +
                         " candidate objects");

  std::vector<Obj> candidates{Obj::zero(n)};
  for (auto z : nz) {
    std::vector<Obj> next;
    for (const auto& c : candidates)
      for (std::size_t m = 0; m <= bound[z]; ++m) {
        Obj o = c;
        o.mult[z] = m;
        next.push_back(std::move(o));
      }
    candidates = std::move(next);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const Obj& a, const Obj& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });

  std::mt19937_64 rng(opts.seed);
  bool certified = true;
  for (const auto& M : candidates) {
    bool dims_ok = true;
    for (auto z : nz)
      if (hom_dim(P, M, ind(P, z)) != kdim[z]) {
        dims_ok = false;
        break;
      }
    if (!dims_ok) continue;
    Matrix kill = precompose_matrix(P, f, M);
    auto space = kernel_basis(kill);
    CandidateMaps maps(P.field(), space, kill.cols(), opts, rng);
    while (auto v = maps.next()) {
      Morphism c = from_coords(Y, M, std::move(*v));
      if (is_cokernel_map(P, f, c)) return Cokernel{M, c};
    }
    if (!maps.exhaustive()) certified = false;
  }
  if (!certified)
    throw BoundsExceeded("cokernel search for " + describe(P, f) +
                         " found candidate objects whose map spaces could not be exhausted");
  throw NoCokernel("no cokernel of " + describe(P, f) + ": exhaustive search over " +
                   std::to_string(candidates.size()) + " candidate objects");
}

Kernel kernel_search(const CategoryPresentation& P, const Morphism& f, const SearchOptions& opts) {
  CategoryPresentation Pop = P.opposite();
  try {
    auto r = cokernel_search(Pop, op(P, f), opts);
    return Kernel{r.obj, op_back(Pop, r.map)};
  } catch (const NoCokernel& e) {
    throw NoKernel(std::string("no kernel (dual search): ") + e.what());
  }
}

LimitSquare pullback(const CategoryPresentation& P, const Morphism& c, const Morphism& d) {
  if (!(c.dst == d.dst)) throw ShapeError("pullback of morphisms with different targets");
  Morphism diff = copair(P, c, negate(d));
  Kernel k = kernel(P, diff);
  Morphism a = compose(P, projection_first(P, c.src, d.src), k.map);
  Morphism b = compose(P, projection_second(P, c.src, d.src), k.map);
  return LimitSquare{k.obj, c.src, d.src, c.dst, a, b, c, d};
}

LimitSquare pushout(const CategoryPresentation& P, const Morphism& a, const Morphism& b) {
  if (!(a.src == b.src)) throw ShapeError("pushout of morphisms with different sources");
  Morphism diff = pair(P, a, negate(b));
  Cokernel q = cokernel(P, diff);
  Morphism c = compose(P, q.map, inclusion_first(P, a.dst, b.dst));
  Morphism d = compose(P, q.map, inclusion_second(P, a.dst, b.dst));
  return LimitSquare{a.src, a.dst, b.dst, q.obj, a, b, c, d};
}

bool is_pullback_square(const CategoryPresentation& P, const LimitSquare& s) {
  if (!(compose(P, s.c, s.a) == compose(P, s.d, s.b))) return false;
  for (auto w : nonzero_indecomposables(P)) {
    const Obj W = ind(P, w);
    Matrix legs = vstack(postcompose_matrix(P, s.a, W), postcompose_matrix(P, s.b, W));
    Matrix cone = hstack(postcompose_matrix(P, s.c, W), negated(postcompose_matrix(P, s.d, W)));
    const std::size_t rl = rank(legs);
    if (rl != legs.cols() || rl != cone.cols() - rank(cone)) return false;
  }
  return true;
}

bool is_pushout_square(const CategoryPresentation& P, const LimitSquare& s) {
  if (!(compose(P, s.c, s.a) == compose(P, s.d, s.b))) return false;
  for (auto w : nonzero_indecomposables(P)) {
    const Obj W = ind(P, w);
    Matrix legs = vstack(precompose_matrix(P, s.c, W), precompose_matrix(P, s.d, W));
    Matrix cocone = hstack(precompose_matrix(P, s.a, W), negated(precompose_matrix(P, s.b, W)));
    const std::size_t rl = rank(legs);
    if (rl != legs.cols() || rl != cocone.cols() - rank(cocone)) return false;
  }
  return true;
}

Factorisation coim_im_factorise(const CategoryPresentation& P, const Morphism& f) {
  Kernel k = kernel(P, f);
  Cokernel u = cokernel(P, k.map);
  Cokernel q = cokernel(P, f);
  Kernel v = kernel(P, q.map);
  // phi -> v o phi o u, from Hom(coim, im) to Hom(X, Y).
  Matrix m = postcompose_matrix(P, v.map, f.src) * precompose_matrix(P, u.map, v.obj);
  auto sol = solve(m, f.coords);
  if (!sol) throw InternalInconsistency("coimage-image factorisation of " + describe(P, f) + " has no middle map");
  Morphism ft = from_coords(u.obj, v.obj, std::move(*sol));
  if (!(compose(P, v.map, compose(P, ft, u.map)) == f))
    throw InternalInconsistency("coimage-image factorisation of " + describe(P, f) + " does not recompose");
  return Factorisation{u.map, ft, v.map};
}

std::vector<Morphism> basis_morphisms(const CategoryPresentation& P) {
  std::vector<Morphism> out;
  const IndexSet nz = nonzero_indecomposables(P);
  for (auto i : nz)
    for (auto j : nz)
      for (std::size_t b = 0; b < P.hom_dim(i, j); ++b) out.push_back(basis_morphism(P, i, j, b));
  return out;
}

bool PropertyReport::integral() const {
  for (const auto& c : pullback_checks)
    if (!c.ok()) return false;
  for (const auto& c : pushout_checks)
    if (!c.ok()) return false;
  return !pullback_checks.empty() || !pushout_checks.empty() || truncated;
}

bool PropertyReport::semi_abelian() const {
  for (const auto& c : pullback_checks)
    if (c.name.find("cokernel") != std::string::npos && !c.ok()) return false;
  for (const auto& c : pushout_checks)
    if (c.name.find("kernel") != std::string::npos && !c.ok()) return false;
  return true;
}

namespace {

void record(PropertyCheck& c, bool holds, const std::string& witness) {
  ++c.instances;
  if (holds) return;
  ++c.failures;
  if (c.counterexamples.size() < 8) c.counterexamples.push_back(witness);
}

struct MapTraits {
  bool epi, mono, cokernel_map, kernel_map;
};

MapTraits traits(const CategoryPresentation& P, const Morphism& d) {
  MapTraits t{is_epi(P, d), is_mono(P, d), false, false};
  if (auto k = try_kernel(P, d)) t.cokernel_map = is_cokernel_map(P, k->map, d);
  if (auto c = try_cokernel(P, d)) t.kernel_map = is_kernel_map(P, c->map, d);
  return t;
}

/// Maps into (or, with dual, out of) single indecomposables plus two-term sums.
std::vector<Morphism> second_maps(const CategoryPresentation& P, const std::vector<Morphism>& basis,
                                  bool include_sums) {
  std::vector<Morphism> out = basis;
  if (!include_sums) return out;
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = x + 1; y < basis.size(); ++y)
      if (basis[x].dst == basis[y].dst) out.push_back(copair(P, basis[x], basis[y]));
  return out;
}

std::vector<Morphism> with_identities(const CategoryPresentation& P, std::vector<Morphism> basis) {
  for (auto i : nonzero_indecomposables(P)) {
    Morphism id = identity(P, ind(P, i));
    if (std::find(basis.begin(), basis.end(), id) == basis.end()) basis.push_back(id);
  }
  return basis;
}

}  // namespace

PropertyReport scan_properties(const CategoryPresentation& P, const ScanBudget& budget) {
  PropertyReport rep;
  const auto basis = basis_morphisms(P);
  for (const auto& f : basis) {
    std::string why;
    record(rep.kernels, try_kernel(P, f).has_value(), describe(P, f));
    auto c = cover_cokernel(P, f, &why);
    record(rep.cokernels, c.has_value(), why);
  }

  PropertyCheck pb_coker{"pullback: cokernel => epi leg"}, pb_epi{"pullback: epi => epi leg"},
      pb_mono{"pullback: mono => mono leg"}, pb_reg{"pullback: regular => regular leg"},
      pb_failed{"pullback: exists"};
  PropertyCheck po_ker{"pushout: kernel => mono leg"}, po_mono{"pushout: mono => mono leg"},
      po_epi{"pushout: epi => epi leg"}, po_reg{"pushout: regular => regular leg"}, po_failed{"pushout: exists"};

  const auto firsts = with_identities(P, basis);
  std::size_t instances = 0;
  auto budget_hit = [&]() { return budget.max_instances != 0 && instances >= budget.max_instances; };

  // Pullbacks of d along c; the leg a is parallel to d.
  for (const auto& d : second_maps(P, basis, budget.include_sums)) {
    if (budget_hit()) break;
    const MapTraits td = traits(P, d);
    if (!td.epi && !td.mono && !td.cokernel_map) continue;
    for (const auto& c : firsts) {
      if (!(c.dst == d.dst)) continue;
      if (budget_hit()) {
        rep.truncated = true;
        break;
      }
      ++instances;
      const std::string w = "c=" + describe(P, c) + ", d=" + describe(P, d);
      LimitSquare sq;
      try {
        sq = pullback(P, c, d);
      } catch (const NoKernel&) {
        record(pb_failed, false, w);
        continue;
      }
      record(pb_failed, true, w);
      const bool ae = is_epi(P, sq.a), am = is_mono(P, sq.a);
      if (td.cokernel_map) record(pb_coker, ae, w);
      if (td.epi) record(pb_epi, ae, w);
      if (td.mono) record(pb_mono, am, w);
      if (td.epi && td.mono) record(pb_reg, ae && am, w);
    }
  }

  // Pushouts of b along a; the leg c is parallel to b.
  std::vector<Morphism> outs = basis;
  if (budget.include_sums)
    for (std::size_t x = 0; x < basis.size(); ++x)
      for (std::size_t y = x + 1; y < basis.size(); ++y)
        if (basis[x].src == basis[y].src) outs.push_back(pair(P, basis[x], basis[y]));
  for (const auto& b : outs) {
    if (budget_hit()) break;
    const MapTraits tb = traits(P, b);
    if (!tb.epi && !tb.mono && !tb.kernel_map) continue;
    for (const auto& a : firsts) {
      if (!(a.src == b.src)) continue;
      if (budget_hit()) {
        rep.truncated = true;
        break;
      }
      ++instances;
      const std::string w = "a=" + describe(P, a) + ", b=" + describe(P, b);
      LimitSquare sq;
      try {
        sq = pushout(P, a, b);
      } catch (const NoCokernel&) {
        record(po_failed, false, w);
        continue;
      }
      record(po_failed, true, w);
      const bool ce = is_epi(P, sq.c), cm = is_mono(P, sq.c);
      if (tb.kernel_map) record(po_ker, cm, w);
      if (tb.mono) record(po_mono, cm, w);
      if (tb.epi) record(po_epi, ce, w);
      if (tb.epi && tb.mono) record(po_reg, ce && cm, w);
    }
  }
  if (budget_hit()) rep.truncated = true;
  rep.pullback_checks = {pb_failed, pb_coker, pb_epi, pb_mono, pb_reg};
  rep.pushout_checks = {po_failed, po_ker, po_mono, po_epi, po_reg};
  return rep;
}

Morphism sink_map(const CategoryPresentation& P, Index i) {
  const Obj I = ind(P, i);
  Obj R = Obj::zero(P.size());
  Vector coords;
  if (P.is_zero_object(i)) return zero_morphism(P, R, I);
  for (auto j : nonzero_indecomposables(P)) {
    std::vector<Vector> rad;
    if (j != i) {
      for (std::size_t b = 0; b < P.hom_dim(j, i); ++b) {
        Vector v = zero_vector(P.field(), P.hom_dim(j, i));
        v[b] = Scalar::one(P.field());
        rad.push_back(std::move(v));
      }
    } else {
      rad = endo_radical(P, i).basis();
    }
    R.mult[j] = rad.size();
    for (const auto& v : rad) coords.insert(coords.end(), v.begin(), v.end());
  }
  return from_coords(R, I, std::move(coords));
}

Morphism source_map(const CategoryPresentation& P, Index i) {
  CategoryPresentation Pop = P.opposite();
  return op(Pop, sink_map(Pop, i));
}

bool is_projective_object(const CategoryPresentation& P, const Obj& X, const ScanBudget& budget) {
  if (hom_dim(P, X, X) == 0) return true;
  std::vector<Morphism> epis;
  for (auto i : nonzero_indecomposables(P)) epis.push_back(sink_map(P, i));
  for (auto& m : second_maps(P, basis_morphisms(P), budget.include_sums)) epis.push_back(std::move(m));
  for (const auto& e : epis) {
    if (!is_epi(P, e)) continue;
    if (!surjective(postcompose_matrix(P, e, X))) return false;
  }
  return true;
}

bool is_injective_object(const CategoryPresentation& P, const Obj& X, const ScanBudget& budget) {
  return is_projective_object(P.opposite(), X, budget);
}

}  // namespace catloc
