#include "catloc/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace catloc {

CategoryPresentation::CategoryPresentation(Field field, std::vector<std::string> names)
    : field_(field), names_(std::move(names)) {
  const std::size_t n = names_.size();
  hom_dim_.assign(n * n, 0);
  constants_.assign(n * n * n, Vector{});
  identity_.assign(n, Vector{});
}

std::optional<Index> CategoryPresentation::find(const std::string& name) const {
  for (Index i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  if (auto it = aliases_.find(name); it != aliases_.end()) return it->second;
  return std::nullopt;
}

void CategoryPresentation::add_alias(const std::string& alias, Index i) {
  if (i >= size()) throw std::out_of_range("alias target out of range");
  aliases_[alias] = i;
}

void CategoryPresentation::set_hom_dim(Index i, Index j, std::size_t d) {
  hom_dim_.at(i * size() + j) = d;
  for (Index k = 0; k < size(); ++k) {
    constants_[triple(i, j, k)] = zero_vector(field_, d * hom_dim(j, k) * hom_dim(i, k));
    constants_[triple(k, i, j)] = zero_vector(field_, hom_dim(k, i) * d * hom_dim(k, j));
    constants_[triple(i, k, j)] = zero_vector(field_, hom_dim(i, k) * hom_dim(k, j) * d);
  }
  if (i == j) identity_[i] = zero_vector(field_, d);
}

const Scalar& CategoryPresentation::constant(Index i, Index j, Index k, std::size_t a,
                                             std::size_t b, std::size_t c) const {
  return constants_[triple(i, j, k)][(a * hom_dim(j, k) + b) * hom_dim(i, k) + c];
}

void CategoryPresentation::set_constant(Index i, Index j, Index k, std::size_t a, std::size_t b,
                                        std::size_t c, const Scalar& v) {
  if (a >= hom_dim(i, j) || b >= hom_dim(j, k) || c >= hom_dim(i, k))
    throw std::out_of_range("structure constant index out of range");
  if (!(v.field() == field_)) throw FieldMismatch("structure constant over the wrong field");
  constants_[triple(i, j, k)][(a * hom_dim(j, k) + b) * hom_dim(i, k) + c] = v;
}

void CategoryPresentation::set_identity(Index i, Vector coords) {
  if (coords.size() != hom_dim(i, i)) throw ShapeError("identity vector has the wrong length");
  identity_.at(i) = std::move(coords);
}

void CategoryPresentation::compose_into(Index i, Index j, Index k, std::span<const Scalar> g,
                                        std::span<const Scalar> f, std::span<Scalar> out) const {
  const std::size_t dij = hom_dim(i, j), djk = hom_dim(j, k), dik = hom_dim(i, k);
  if (dik == 0 || dij == 0 || djk == 0) return;
  const Vector& cst = constants_[triple(i, j, k)];
  for (std::size_t a = 0; a < dij; ++a) {
    if (f[a].is_zero()) continue;
    for (std::size_t b = 0; b < djk; ++b) {
      if (g[b].is_zero()) continue;
      Scalar fg = f[a] * g[b];
      const Scalar* row = cst.data() + (a * djk + b) * dik;
      for (std::size_t c = 0; c < dik; ++c)
        if (!row[c].is_zero()) out[c] += fg * row[c];
    }
  }
}

Vector CategoryPresentation::compose(Index i, Index j, Index k, std::span<const Scalar> g,
                                     std::span<const Scalar> f) const {
  if (g.size() != hom_dim(j, k) || f.size() != hom_dim(i, j))
    throw ShapeError("coefficient vector length mismatch in composition");
  Vector out = zero_vector(field_, hom_dim(i, k));
  compose_into(i, j, k, g, f, out);
  return out;
}

Index CategoryPresentation::sigma(Index i) const {
  if (!sigma_) throw MissingSuspension("presentation has no suspension");
  return (*sigma_).at(i);
}

Index CategoryPresentation::sigma_inv(Index i) const {
  if (!sigma_) throw MissingSuspension("presentation has no suspension");
  return sigma_inv_.at(i);
}

void CategoryPresentation::set_sigma(std::vector<Index> perm) {
  if (perm.size() != size()) throw ShapeError("suspension permutation has the wrong length");
  std::vector<Index> inv(size(), size());
  for (Index i = 0; i < size(); ++i) {
    if (perm[i] >= size() || inv[perm[i]] != size())
      throw std::invalid_argument("suspension is not a permutation");
    inv[perm[i]] = i;
  }
  sigma_ = std::move(perm);
  sigma_inv_ = std::move(inv);
}

CategoryPresentation CategoryPresentation::opposite() const {
  CategoryPresentation op(field_, names_);
  const std::size_t n = size();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) op.set_hom_dim(i, j, hom_dim(j, i));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        // b o_op a = a o b, with a: j -> i and b: k -> j in the original.
        for (std::size_t a = 0; a < hom_dim(j, i); ++a)
          for (std::size_t b = 0; b < hom_dim(k, j); ++b)
            for (std::size_t c = 0; c < hom_dim(k, i); ++c) {
              const Scalar& v = constant(k, j, i, b, a, c);
              if (!v.is_zero()) op.set_constant(i, j, k, a, b, c, v);
            }
  for (Index i = 0; i < n; ++i) op.set_identity(i, identity_[i]);
  if (sigma_) op.set_sigma(sigma_inv_);
  op.allows_zero_objects_ = allows_zero_objects_;
  op.aliases_ = aliases_;
  op.metadata_ = metadata_;
  return op;
}

bool operator==(const CategoryPresentation& a, const CategoryPresentation& b) {
  return a.field_ == b.field_ && a.names_ == b.names_ && a.hom_dim_ == b.hom_dim_ &&
         a.constants_ == b.constants_ && a.identity_ == b.identity_ && a.sigma_ == b.sigma_ &&
         a.allows_zero_objects_ == b.allows_zero_objects_ && a.aliases_ == b.aliases_;
}

Obj Obj::indecomposable(std::size_t n, Index i, std::size_t copies) {
  Obj o = zero(n);
  o.mult.at(i) = copies;
  return o;
}

Obj Obj::from_set(std::size_t n, const IndexSet& s) {
  Obj o = zero(n);
  for (auto i : s) o.mult.at(i) = 1;
  return o;
}

std::size_t Obj::total() const { return std::accumulate(mult.begin(), mult.end(), std::size_t{0}); }

std::vector<Index> Obj::slots() const {
  std::vector<Index> out;
  for (Index i = 0; i < mult.size(); ++i)
    for (std::size_t c = 0; c < mult[i]; ++c) out.push_back(i);
  return out;
}

IndexSet Obj::support() const {
  IndexSet out;
  for (Index i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) out.push_back(i);
  return out;
}

Obj Obj::operator+(const Obj& o) const {
  if (mult.size() != o.mult.size()) throw ShapeError("objects from different categories");
  Obj r = *this;
  for (Index i = 0; i < mult.size(); ++i) r.mult[i] += o.mult[i];
  return r;
}

std::string to_string(const CategoryPresentation& P, const Obj& X) {
  if (X.is_zero()) return "0";
  std::string out;
  for (Index i = 0; i < X.mult.size(); ++i) {
    if (X.mult[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (X.mult[i] > 1) out += std::to_string(X.mult[i]) + "*";
    out += P.name(i);
  }
  return out;
}

HomLayout hom_layout(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  HomLayout L;
  L.src_slots = X.slots();
  L.dst_slots = Y.slots();
  L.offsets.reserve(L.src_slots.size() * L.dst_slots.size() + 1);
  std::size_t off = 0;
  for (auto t : L.dst_slots)
    for (auto s : L.src_slots) {
      L.offsets.push_back(off);
      off += P.hom_dim(s, t);
    }
  L.offsets.push_back(off);
  L.dim = off;
  return L;
}

std::size_t hom_dim(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  std::size_t d = 0;
  for (Index i = 0; i < X.mult.size(); ++i) {
    if (X.mult[i] == 0) continue;
    for (Index j = 0; j < Y.mult.size(); ++j) d += X.mult[i] * Y.mult[j] * P.hom_dim(i, j);
  }
  return d;
}

Morphism zero_morphism(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  return {X, Y, zero_vector(P.field(), hom_dim(P, X, Y))};
}

Morphism identity(const CategoryPresentation& P, const Obj& X) {
  HomLayout L = hom_layout(P, X, X);
  Morphism m{X, X, zero_vector(P.field(), L.dim)};
  for (std::size_t s = 0; s < L.src_slots.size(); ++s) {
    const Vector& id = P.identity(L.src_slots[s]);
    std::copy(id.begin(), id.end(), m.coords.begin() + L.block_offset(s, s));
  }
  return m;
}

Morphism basic_morphism(const CategoryPresentation& P, Index i, Index j, Vector coords) {
  if (coords.size() != P.hom_dim(i, j)) throw ShapeError("coefficient vector length mismatch");
  return {Obj::indecomposable(P.size(), i), Obj::indecomposable(P.size(), j), std::move(coords)};
}

Morphism basis_morphism(const CategoryPresentation& P, Index i, Index j, std::size_t b) {
  Vector v = zero_vector(P.field(), P.hom_dim(i, j));
  v.at(b) = Scalar::one(P.field());
  return basic_morphism(P, i, j, std::move(v));
}

std::vector<Morphism> hom_basis(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  const std::size_t d = hom_dim(P, X, Y);
  std::vector<Morphism> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector v = zero_vector(P.field(), d);
    v[k] = Scalar::one(P.field());
    out.push_back({X, Y, std::move(v)});
  }
  return out;
}

Morphism from_coords(const Obj& X, const Obj& Y, Vector coords) { return {X, Y, std::move(coords)}; }

namespace {

void compose_coords(const CategoryPresentation& P, const HomLayout& Lg, std::span<const Scalar> g,
                    const HomLayout& Lf, std::span<const Scalar> f, const HomLayout& Lout,
                    std::span<Scalar> out) {
  const std::size_t nx = Lf.src_slots.size(), ny = Lf.dst_slots.size(), nz = Lg.dst_slots.size();
  for (std::size_t u = 0; u < nz; ++u)
    for (std::size_t t = 0; t < ny; ++t) {
      const std::size_t dg = Lg.block_dim(u, t);
      if (dg == 0) continue;
      auto gb = g.subspan(Lg.block_offset(u, t), dg);
      if (is_zero_vector(gb)) continue;
      for (std::size_t s = 0; s < nx; ++s) {
        const std::size_t df = Lf.block_dim(t, s);
        if (df == 0 || Lout.block_dim(u, s) == 0) continue;
        auto fb = f.subspan(Lf.block_offset(t, s), df);
        P.compose_into(Lf.src_slots[s], Lf.dst_slots[t], Lg.dst_slots[u], gb, fb,
                       out.subspan(Lout.block_offset(u, s), Lout.block_dim(u, s)));
      }
    }
}

}  // namespace

Morphism compose(const CategoryPresentation& P, const Morphism& g, const Morphism& f) {
  if (!(f.dst == g.src)) throw ShapeError("composition of non-composable morphisms");
  HomLayout Lf = hom_layout(P, f.src, f.dst);
  HomLayout Lg = hom_layout(P, g.src, g.dst);
  HomLayout Lo = hom_layout(P, f.src, g.dst);
  if (Lf.dim != f.coords.size() || Lg.dim != g.coords.size())
    throw ShapeError("morphism coordinates do not match their endpoints");
  Morphism out{f.src, g.dst, zero_vector(P.field(), Lo.dim)};
  compose_coords(P, Lg, g.coords, Lf, f.coords, Lo, out.coords);
  return out;
}

Morphism add(const Morphism& f, const Morphism& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) throw ShapeError("sum of morphisms with different endpoints");
  Morphism out = f;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += g.coords[i];
  return out;
}

Morphism sub(const Morphism& f, const Morphism& g) { return add(f, negate(g)); }

Morphism scale(const Scalar& s, const Morphism& f) {
  Morphism out = f;
  for (auto& c : out.coords) c *= s;
  return out;
}

Morphism negate(const Morphism& f) {
  Morphism out = f;
  for (auto& c : out.coords) c = -c;
  return out;
}

Matrix precompose_matrix(const CategoryPresentation& P, const Morphism& f, const Obj& Z) {
  HomLayout Lf = hom_layout(P, f.src, f.dst);
  HomLayout Lh = hom_layout(P, f.dst, Z);
  HomLayout Lo = hom_layout(P, f.src, Z);
  Matrix m(P.field(), Lo.dim, Lh.dim);
  Vector h = zero_vector(P.field(), Lh.dim);
  Vector out = zero_vector(P.field(), Lo.dim);
  for (std::size_t col = 0; col < Lh.dim; ++col) {
    h[col] = Scalar::one(P.field());
    std::fill(out.begin(), out.end(), Scalar::zero(P.field()));
    compose_coords(P, Lh, h, Lf, f.coords, Lo, out);
    for (std::size_t r = 0; r < Lo.dim; ++r)
      if (!out[r].is_zero()) m(r, col) = out[r];
    h[col] = Scalar::zero(P.field());
  }
  return m;
}

Matrix postcompose_matrix(const CategoryPresentation& P, const Morphism& f, const Obj& Z) {
  HomLayout Lf = hom_layout(P, f.src, f.dst);
  HomLayout Lh = hom_layout(P, Z, f.src);
  HomLayout Lo = hom_layout(P, Z, f.dst);
  Matrix m(P.field(), Lo.dim, Lh.dim);
  Vector h = zero_vector(P.field(), Lh.dim);
  Vector out = zero_vector(P.field(), Lo.dim);
  for (std::size_t col = 0; col < Lh.dim; ++col) {
    h[col] = Scalar::one(P.field());
    std::fill(out.begin(), out.end(), Scalar::zero(P.field()));
    compose_coords(P, Lf, f.coords, Lh, h, Lo, out);
    for (std::size_t r = 0; r < Lo.dim; ++r)
      if (!out[r].is_zero()) m(r, col) = out[r];
    h[col] = Scalar::zero(P.field());
  }
  return m;
}

Morphism op(const CategoryPresentation& P, const Morphism& f) {
  HomLayout L = hom_layout(P, f.src, f.dst);
  // In the opposite layout the blocks are indexed (s, t) row-major and each
  // block keeps its original coefficient vector.
  Morphism out{f.dst, f.src, Vector{}};
  out.coords.reserve(L.dim);
  for (std::size_t s = 0; s < L.src_slots.size(); ++s)
    for (std::size_t t = 0; t < L.dst_slots.size(); ++t) {
      auto off = L.block_offset(t, s);
      out.coords.insert(out.coords.end(), f.coords.begin() + off,
                        f.coords.begin() + off + L.block_dim(t, s));
    }
  return out;
}

namespace {

// Slot position in X + Y of copy c of indecomposable i coming from X (or Y).
std::vector<std::size_t> sum_positions(const Obj& X, const Obj& Y, bool second) {
  std::vector<std::size_t> pos;
  std::size_t base = 0;
  for (Index i = 0; i < X.mult.size(); ++i) {
    const std::size_t from = second ? base + X.mult[i] : base;
    const std::size_t count = second ? Y.mult[i] : X.mult[i];
    for (std::size_t c = 0; c < count; ++c) pos.push_back(from + c);
    base += X.mult[i] + Y.mult[i];
  }
  return pos;
}

// Morphism A -> B sending source slot s identically onto target slot pos[s].
Morphism slot_embedding(const CategoryPresentation& P, const Obj& A, const Obj& B,
                        const std::vector<std::size_t>& pos) {
  HomLayout L = hom_layout(P, A, B);
  Morphism m{A, B, zero_vector(P.field(), L.dim)};
  for (std::size_t s = 0; s < L.src_slots.size(); ++s) {
    const Vector& id = P.identity(L.src_slots[s]);
    std::copy(id.begin(), id.end(), m.coords.begin() + L.block_offset(pos[s], s));
  }
  return m;
}

// Morphism B -> A picking target slot t from source slot pos[t].
Morphism slot_projection(const CategoryPresentation& P, const Obj& B, const Obj& A,
                         const std::vector<std::size_t>& pos) {
  HomLayout L = hom_layout(P, B, A);
  Morphism m{B, A, zero_vector(P.field(), L.dim)};
  for (std::size_t t = 0; t < L.dst_slots.size(); ++t) {
    const Vector& id = P.identity(L.dst_slots[t]);
    std::copy(id.begin(), id.end(), m.coords.begin() + L.block_offset(t, pos[t]));
  }
  return m;
}

}  // namespace

Morphism inclusion_first(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  return slot_embedding(P, X, X + Y, sum_positions(X, Y, false));
}
Morphism inclusion_second(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  return slot_embedding(P, Y, X + Y, sum_positions(X, Y, true));
}
Morphism projection_first(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  return slot_projection(P, X + Y, X, sum_positions(X, Y, false));
}
Morphism projection_second(const CategoryPresentation& P, const Obj& X, const Obj& Y) {
  return slot_projection(P, X + Y, Y, sum_positions(X, Y, true));
}

Morphism copair(const CategoryPresentation& P, const Morphism& f, const Morphism& g) {
  if (!(f.dst == g.dst)) throw ShapeError("copair of morphisms with different targets");
  return add(compose(P, f, projection_first(P, f.src, g.src)),
             compose(P, g, projection_second(P, f.src, g.src)));
}

Morphism pair(const CategoryPresentation& P, const Morphism& f, const Morphism& g) {
  if (!(f.src == g.src)) throw ShapeError("pair of morphisms with different sources");
  return add(compose(P, inclusion_first(P, f.dst, g.dst), f),
             compose(P, inclusion_second(P, f.dst, g.dst), g));
}

Obj slots_object(const CategoryPresentation& P, const Obj& X,
                 const std::vector<std::size_t>& keep_slots) {
  auto slots = X.slots();
  Obj A = Obj::zero(P.size());
  for (auto s : keep_slots) A.mult[slots.at(s)] += 1;
  return A;
}

Morphism slot_inclusion(const CategoryPresentation& P, const Obj& X,
                        const std::vector<std::size_t>& keep_slots) {
  if (!std::is_sorted(keep_slots.begin(), keep_slots.end()))
    throw std::invalid_argument("slot list must be ascending");
  return slot_embedding(P, slots_object(P, X, keep_slots), X, keep_slots);
}

Morphism restrict_source(const CategoryPresentation& P, const Morphism& f,
                         const std::vector<std::size_t>& keep_slots) {
  return compose(P, f, slot_inclusion(P, f.src, keep_slots));
}

std::string describe(const CategoryPresentation& P, const Morphism& f) {
  HomLayout L = hom_layout(P, f.src, f.dst);
  const bool simple = L.src_slots.size() == 1 && L.dst_slots.size() == 1;
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < L.dst_slots.size(); ++t)
    for (std::size_t s = 0; s < L.src_slots.size(); ++s)
      for (std::size_t b = 0; b < L.block_dim(t, s); ++b) {
        const Scalar& c = f.coords[L.block_offset(t, s) + b];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.to_string() << "*";
        os << P.name(L.src_slots[s]) << "->" << P.name(L.dst_slots[t]) << "#" << b;
        if (!simple) os << "[" << s << "," << t << "]";
      }
  if (first) os << "0";
  return os.str();
}

}  // namespace catloc
