#pragma once

// Algebra read off the standard cover: overlap classes, associated primes,
// multiplicities, radicals and irreducible decompositions.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "stdpairs/covers.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/pair.hpp"
#include "stdpairs/pairs.hpp"

namespace stdpairs {

/// Per face, the connected components of the standard pairs under
/// "translates intersect". Memoized on I.
inline OverlapMap overlap_classes(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  if (auto cached = i.cached_overlap_classes()) return *cached;
  const Cover cover = standard_cover(i, opts);
  OverlapMap out;
  for (const auto& [face, bucket] : cover.buckets()) {
    const std::size_t n = bucket.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (find(a) != find(b) && !intersect_pairs(bucket[a], bucket[b]).empty()) parent[find(a)] = find(b);

    std::map<std::size_t, OverlapClass> blocks;
    for (std::size_t a = 0; a < n; ++a) {
      OverlapClass& cls = blocks[find(a)];
      cls.face = face;
      cls.pairs.push_back(bucket[a]);
    }
    std::vector<OverlapClass>& classes = out[face];
    for (auto& [root, cls] : blocks) classes.push_back(std::move(cls));
    std::sort(classes.begin(), classes.end(),
              [](const OverlapClass& x, const OverlapClass& y) { return x.pairs.front().base() < y.pairs.front().base(); });
  }
  i.store_overlap_classes(out);
  return out;
}

namespace detail {

// Some pair of `lo` divides some pair of `hi`.
inline bool class_below(const OverlapClass& lo, const OverlapClass& hi) {
  for (const ProperPair& p : lo.pairs)
    for (const ProperPair& q : hi.pairs)
      if (!divides(p, q).empty()) return true;
  return false;
}

}  // namespace detail

/// Overlap classes not strictly below another class, where one class lies
/// below another when some pair of the first divides some pair of the second.
inline OverlapMap maximal_overlap_classes(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  const OverlapMap all = overlap_classes(i, opts);
  std::vector<const OverlapClass*> flat;
  for (const auto& [f, classes] : all)
    for (const OverlapClass& c : classes) flat.push_back(&c);

  OverlapMap out;
  for (std::size_t a = 0; a < flat.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < flat.size() && !dominated; ++b)
      if (a != b && detail::class_below(*flat[a], *flat[b]) && !detail::class_below(*flat[b], *flat[a]))
        dominated = true;
    if (!dominated) out[flat[a]->face].push_back(*flat[a]);
  }
  return out;
}

/// Face F -> P_F for every face carrying a maximal overlap class.
inline std::map<FaceIndex, MonomialIdeal> associated_primes(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  std::map<FaceIndex, MonomialIdeal> out;
  for (const auto& [f, classes] : maximal_overlap_classes(i, opts)) out.emplace(f, prime_ideal(i.ambient_ptr(), f));
  return out;
}

/// Number of overlap classes of I over an associated face F.
inline std::size_t multiplicity(const MonomialIdeal& i, const FaceIndex& f, const CoverOptions& opts = {}) {
  const auto primes = associated_primes(i, opts);
  if (!primes.count(f)) throw DomainError("face " + f.str() + " does not carry an associated prime");
  return overlap_classes(i, opts).at(f).size();
}

inline std::size_t multiplicity(const MonomialIdeal& i, const MonomialIdeal& prime, const CoverOptions& opts = {}) {
  const auto f = face_of_prime(prime);
  if (!f) throw DomainError("multiplicity needs a prime ideal");
  return multiplicity(i, *f, opts);
}

namespace detail {

// q lies below s + f in the monoid order for some base s and some f in NF.
inline bool below_class(const AffineMonoid& q, const IntMatrix& face, const std::vector<IntVector>& bases,
                        const IntVector& point) {
  const IntMatrix system = hconcat(q.gens(), -face);
  for (const IntVector& s : bases)
    if (!min_nonneg_solutions(system, s - point).empty()) return true;
  return false;
}

}  // namespace detail

/// The irreducible component W of a maximal overlap class C over F. Its
/// standard monomials are the q in NA lying below s + f for some base s of C
/// and some f in NF.
///
/// Every such q satisfies phi_H(q) <= c_H := max_s phi_H(s) for the facets H
/// containing F, so W holds the threshold ideal {some phi_H(q) > c_H}. The
/// remaining generators have a factorization avoiding the columns of F and
/// respect every threshold, which bounds them to a finite box.
inline MonomialIdeal irreducible_component(const MonomialIdeal& i, const FaceIndex& f, const OverlapClass& cls,
                                           const CoverOptions& opts = {}) {
  const OverlapMap maximal = maximal_overlap_classes(i, opts);
  auto it = maximal.find(f);
  if (it == maximal.end() || std::find(it->second.begin(), it->second.end(), cls) == it->second.end())
    throw DomainError("not a maximal overlap class over face " + f.str());

  const AffineMonoid& q = i.ambient();
  const ConeData& cone = q.cone();
  const IntMatrix& a = q.gens();
  const std::size_t n = a.cols();
  std::vector<IntVector> bases;
  for (const ProperPair& p : cls.pairs) bases.push_back(p.base());

  struct Threshold {
    IntVector values;  // phi_H on each generator
    Int cap;           // c_H
  };
  std::vector<Threshold> thresholds;
  std::vector<IntVector> candidates;
  for (std::size_t h = 0; h < cone.facets.size(); ++h) {
    const auto& on = cone.facet_columns[h];
    if (!std::includes(on.begin(), on.end(), f.indices().begin(), f.indices().end())) continue;
    const IntVector& phi = cone.facets[h];
    Threshold th{IntVector(n), Int(0)};
    for (const IntVector& s : bases) th.cap = std::max(th.cap, dot(phi, s));
    Int step = 0;
    IntMatrix row(1, n);
    for (std::size_t j = 0; j < n; ++j) {
      th.values[j] = row(0, j) = dot(phi, q.column(j));
      step = std::max(step, row(0, j));
    }
    // A minimal element above the threshold overshoots it by at most the
    // largest generator value.
    for (Int t = th.cap + 1; t <= th.cap + step; ++t)
      for (const IntVector& x : min_nonneg_solutions(row, IntVector{t})) candidates.push_back(a * x);
    thresholds.push_back(std::move(th));
  }

  // Box of factorizations x with x_F = 0 inside every threshold.
  std::vector<std::size_t> free_cols;
  std::vector<Int> bound;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::binary_search(f.indices().begin(), f.indices().end(), j)) continue;
    std::optional<Int> b;
    for (const Threshold& th : thresholds)
      if (th.values[j] > 0) {
        const Int cand = th.cap / th.values[j];
        if (!b || cand < *b) b = cand;
      }
    if (!b) throw std::logic_error("generator off the face is not cut by any facet through it");
    free_cols.push_back(j);
    bound.push_back(*b);
  }
  const IntMatrix face = q.face(f);
  IntVector x = zero_vector(n);
  while (true) {
    const IntVector point = a * x;
    bool inside = true;
    for (const Threshold& th : thresholds)
      if (dot(th.values, x) > th.cap) inside = false;
    if (inside && !is_zero(point) && !detail::below_class(q, face, bases, point)) candidates.push_back(point);
    std::size_t k = 0;
    for (; k < free_cols.size(); ++k) {
      Int& v = x[free_cols[k]];
      if (v < bound[k]) {
        v += 1;
        break;
      }
      v = 0;
    }
    if (k == free_cols.size()) break;
  }
  return MonomialIdeal(i.ambient_ptr(), std::move(candidates));
}

/// One irreducible component per maximal overlap class. Memoized on I.
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  std::vector<MonomialIdeal> out;
  if (auto cached = i.cached_decomposition()) {
    for (const auto& gens : *cached) out.emplace_back(i.ambient_ptr(), gens);
    return out;
  }
  for (const auto& [f, classes] : maximal_overlap_classes(i, opts))
    for (const OverlapClass& cls : classes) {
      MonomialIdeal w = irreducible_component(i, f, cls, opts);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
    }
  ComponentList store;
  for (const MonomialIdeal& w : out) store.push_back(w.generators());
  i.store_decomposition(std::move(store));
  return out;
}

/// Intersection of the primes of the maximal faces in the standard cover.
inline MonomialIdeal radical(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  if (i.is_empty()) return i;
  const Cover cover = standard_cover(i, opts);
  std::vector<FaceIndex> faces;
  for (const auto& [f, b] : cover.buckets()) faces.push_back(f);
  std::optional<MonomialIdeal> out;
  for (const FaceIndex& f : faces) {
    bool maximal = true;
    for (const FaceIndex& g : faces)
      if (!(g == f) && g.contains(f)) maximal = false;
    if (!maximal) continue;
    MonomialIdeal p = prime_ideal(i.ambient_ptr(), f);
    out = out ? intersect(*out, p) : p;
  }
  return *out;
}

inline bool is_radical(const MonomialIdeal& i, const CoverOptions& opts = {}) { return radical(i, opts) == i; }

inline bool is_primary(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  return associated_primes(i, opts).size() == 1;
}

inline bool is_irreducible(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  return irreducible_decomposition(i, opts).size() == 1;
}

}  // namespace stdpairs
