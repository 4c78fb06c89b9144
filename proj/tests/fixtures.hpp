#pragma once

#include <map>
#include <utility>
#include <vector>

#include "catloc/clustergen.hpp"
#include "catloc/fincat.hpp"

namespace catloc::testing {

inline Field f101() { return Field::prime(101); }

/// C(A_n) with the linear orientation, built once per (n, field).
inline const CategoryPresentation& cluster(std::size_t n, const Field& F = f101()) {
  static std::map<std::pair<std::size_t, std::uint32_t>, CategoryPresentation> cache;
  auto key = std::make_pair(n, F.modulus());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_cluster_category(n, "", F)).first;
  return it->second;
}

inline Index idx(const CategoryPresentation& P, const std::string& name) {
  auto i = P.find(name);
  if (!i) throw std::invalid_argument("no object " + name);
  return *i;
}

inline Obj obj(const CategoryPresentation& P, std::initializer_list<const char*> names) {
  Obj X = Obj::zero(P.size());
  for (const char* n : names) X.mult[idx(P, n)] += 1;
  return X;
}

/// Basic rigid objects with at most max_summands summands, by brute force over subsets.
inline std::vector<Obj> rigid_objects(const CategoryPresentation& P, std::size_t max_summands = 3) {
  std::vector<Obj> out;
  const std::size_t n = P.size();
  for (unsigned m = 1; m < (1u << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcount(m)) > max_summands) continue;
    Obj T = Obj::zero(n);
    for (Index i = 0; i < n; ++i)
      if (m >> i & 1) T.mult[i] = 1;
    if (is_rigid(P, T)) out.push_back(T);
  }
  return out;
}

/// Diagonal of the (n+3)-gon labelling each object, read back from generator metadata.
inline std::vector<std::pair<std::size_t, std::size_t>> diagonal_labels(const CategoryPresentation& P) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& d : P.metadata().at("diagonals")) out.emplace_back(d[0].get<std::size_t>(), d[1].get<std::size_t>());
  return out;
}

/// Interior crossing of chords (a,b), (c,d) of a polygon, a < b and c < d.
inline bool chords_cross(std::pair<std::size_t, std::size_t> x, std::pair<std::size_t, std::size_t> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline std::pair<std::size_t, std::size_t> rotate_chord(std::pair<std::size_t, std::size_t> x, long k,
                                                        std::size_t polygon) {
  auto r = [&](std::size_t v) {
    long w = (static_cast<long>(v) + k) % static_cast<long>(polygon);
    return static_cast<std::size_t>(w < 0 ? w + static_cast<long>(polygon) : w);
  };
  auto a = r(x.first), b = r(x.second);
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace catloc::testing
