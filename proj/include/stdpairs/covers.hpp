#pragma once

// Standard covers: polynomial-ring standard pairs, pair differences, the
// cover refinement fixpoint and the generator-by-generator driver.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/pair.hpp"
#include "stdpairs/pairs.hpp"

namespace stdpairs {

/// A monomial ideal of the polynomial semigroup N^m, by exponent vectors.
struct PolyMonomialIdeal {
  std::size_t vars = 0;
  std::vector<IntVector> exponents;
};

/// (x^u, V): u vanishes on the variables in V.
struct PolyStdPair {
  IntVector u;
  std::vector<std::size_t> free_vars;

  friend bool operator==(const PolyStdPair&, const PolyStdPair&) = default;
  friend bool operator<(const PolyStdPair& a, const PolyStdPair& b) {
    if (a.free_vars != b.free_vars) return a.free_vars < b.free_vars;
    return a.u < b.u;
  }
};

/// Maximal pairs (u, V) with u + N^V disjoint from J.
///
/// For each admissible V the candidate bases range over the box
/// u_i < max_g g_i off V: a base reaching the maximum in coordinate i is
/// contained in a proper pair that also frees variable i. A proper pair is
/// maximal iff freeing any single further variable breaks properness.
inline std::vector<PolyStdPair> poly_standard_pairs(const PolyMonomialIdeal& j) {
  const std::size_t m = j.vars;
  for (const IntVector& g : j.exponents) {
    if (g.size() != m) throw ContractError("exponent vector length does not match variable count");
    if (is_zero(g)) throw DomainError("the unit ideal has no standard pairs");
  }
  if (m >= 8 * sizeof(std::size_t) - 1) throw ContractError("too many variables");

  std::vector<Int> bound(m, Int(0));
  for (const IntVector& g : j.exponents)
    for (std::size_t i = 0; i < m; ++i)
      if (g[i] > bound[i]) bound[i] = g[i];

  auto proper = [&](const IntVector& u, std::size_t mask) {
    for (const IntVector& g : j.exponents) {
      bool below = true;
      for (std::size_t i = 0; i < m && below; ++i)
        if (!(mask >> i & 1) && g[i] > u[i]) below = false;
      if (below) return false;
    }
    return true;
  };

  std::vector<PolyStdPair> out;
  const std::size_t full = std::size_t{1} << m;
  for (std::size_t mask = 0; mask < full; ++mask) {
    IntVector zero = zero_vector(m);
    if (!proper(zero, mask)) continue;
    std::vector<std::size_t> bounded;
    for (std::size_t i = 0; i < m; ++i)
      if (!(mask >> i & 1)) bounded.push_back(i);

    IntVector u = zero_vector(m);
    while (true) {
      if (proper(u, mask)) {
        bool maximal = true;
        for (std::size_t i : bounded) {
          IntVector w = u;
          w[i] = 0;
          if (proper(w, mask | (std::size_t{1} << i))) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          std::vector<std::size_t> v;
          for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) v.push_back(i);
          out.push_back({u, std::move(v)});
        }
      }
      // Odometer over the box off V.
      std::size_t k = 0;
      for (; k < bounded.size(); ++k) {
        const std::size_t i = bounded[k];
        if (u[i] + 1 < bound[i]) {
          u[i] += 1;
          break;
        }
        u[i] = 0;
      }
      if (k == bounded.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Pairs over faces of G whose translates partition-cover
/// (b + NG) \ (b2 + NG2). Requires G to be a subset of G2.
inline Cover pair_difference(const MonoidPtr& q, const IntVector& b, const FaceIndex& g, const IntVector& b2,
                             const FaceIndex& g2) {
  if (g.is_bottom() || g2.is_bottom() || !q->has_face(g) || !q->has_face(g2))
    throw DomainError("pair difference needs faces of the monoid");
  if (!g2.contains(g)) throw DomainError("pair difference needs the first face inside the second");

  const IntMatrix gm = q->face(g);
  const std::size_t m = gm.cols();
  PolyMonomialIdeal j{m, {}};
  for (const IntVector& uv : min_nonneg_solutions(hconcat(gm, -q->face(g2)), b2 - b)) {
    IntVector u(uv.begin(), uv.begin() + static_cast<std::ptrdiff_t>(m));
    if (is_zero(u)) return Cover{};  // b itself lies in b2 + NG2
    j.exponents.push_back(std::move(u));
  }
  sort_unique(j.exponents);

  Cover out;
  for (const PolyStdPair& sp : poly_standard_pairs(j)) {
    std::vector<std::size_t> cols;
    for (std::size_t v : sp.free_vars) cols.push_back(g.indices()[v]);
    FaceIndex h(std::move(cols));
    // Freed variables of a standard pair always span a face of G: adding a
    // column of the smallest face containing them keeps the pair proper.
    if (!q->has_face(h)) throw std::logic_error("pair difference produced a non-face " + h.str());
    out.add(ProperPair(b + gm * sp.u, std::move(h), q));
  }
  return out;
}

inline Cover pair_difference(const ProperPair& p, const ProperPair& p2) {
  return pair_difference(p.monoid(), p.base(), p.face(), p2.base(), p2.face());
}

inline Cover retag(const Cover& c, const std::string& ideal_hash) {
  Cover out;
  for (const ProperPair& p : c.pairs()) out.add(p.with_ideal(ideal_hash));
  return out;
}

/// Standard cover of a principal ideal <b>: the difference (0, A) minus (b, A).
inline Cover principal_cover(const MonomialIdeal& i) {
  if (!i.is_principal()) throw DomainError("principal_cover needs a principal ideal");
  const MonoidPtr& q = i.ambient_ptr();
  const FaceIndex top = q->top_face();
  return retag(pair_difference(q, zero_vector(q->dim()), top, i.generators().front(), top), i.hash_string());
}

/// Minimal elements, in the monoid order, of {q in NA : q - a in RF}.
inline std::vector<IntVector> minimal_holes(const IntVector& a, const FaceIndex& f, const AffineMonoid& q) {
  const SupportMatrix& s = q.supports(f);
  const IntMatrix& gens = q.gens();
  std::vector<IntVector> points;
  if (s.rows() == 0) {
    points.push_back(zero_vector(q.dim()));
  } else {
    for (const IntVector& x : min_nonneg_solutions(s * gens, s * a)) points.push_back(gens * x);
  }
  sort_unique(points);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < points.size() && minimal; ++k)
      if (k != i && q.divides(points[k], points[i])) minimal = false;
    if (minimal) out.push_back(points[i]);
  }
  return out;
}

struct CoverOptions {
  std::size_t loop_cap = 1000;
  /// Receives progress lines; never called when empty.
  std::function<void(const std::string&)> progress;
};

namespace detail {

inline Cover czero_to_cone(const Cover& c0, const AffineMonoid& q) {
  Cover out;
  for (const ProperPair& p : c0.pairs())
    for (IntVector& h : minimal_holes(p.base(), p.face(), q)) out.add(ProperPair(std::move(h), p.face(), p.monoid()));
  return out;
}

inline Cover cone_to_ctwo(const Cover& c1, const AffineMonoid& q, const std::vector<IntVector>& gens,
                          const std::string& hash) {
  Cover out;
  std::set<std::pair<IntVector, FaceIndex>> tried;
  for (const ProperPair& p : c1.pairs())
    for (const FaceIndex& g : q.faces_containing(p.face())) {
      if (!tried.emplace(p.base(), g).second) continue;
      if (is_proper(q, gens, p.base(), g)) out.add(ProperPair(p.base(), g, p.monoid(), hash));
    }
  return out;
}

// Drops every pair whose translate is strictly inside another's.
inline Cover prune_contained(const Cover& c) {
  const std::vector<ProperPair> all = c.pairs();
  Cover out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool contained = false;
    for (std::size_t k = 0; k < all.size() && !contained; ++k)
      if (k != i && pair_subset(all[i], all[k])) contained = true;
    if (!contained) out.add(all[i]);
  }
  return out;
}

inline Cover cover_to_standard(Cover c, const AffineMonoid& q, const std::vector<IntVector>& gens,
                               const std::string& hash, std::size_t loop_cap) {
  for (std::size_t iter = 0; iter < loop_cap; ++iter) {
    Cover next = prune_contained(cone_to_ctwo(czero_to_cone(c, q), q, gens, hash));
    if (next.same_pairs(c)) return next;
    c = std::move(next);
  }
  throw LoopCapExceeded(loop_cap);
}

}  // namespace detail

/// Replaces each pair (a, F) of c0 by the pairs (b, F) over the minimal
/// holes b of the slice (a + RF) in NA. No properness check.
inline Cover czero_to_cone(const Cover& c0, const MonomialIdeal& i) { return detail::czero_to_cone(c0, i.ambient()); }

/// Keeps every proper pair (b, G) with (b, F) in c1 and G containing F.
inline Cover cone_to_ctwo(const Cover& c1, const MonomialIdeal& i) {
  return detail::cone_to_ctwo(c1, i.ambient(), i.generators(), i.hash_string());
}

/// Refines a cover of std(I) by proper pairs to the standard cover.
inline Cover cover_to_standard(const Cover& c, const MonomialIdeal& i, std::size_t loop_cap = 1000) {
  return detail::cover_to_standard(c, i.ambient(), i.generators(), i.hash_string(), loop_cap);
}

/// All standard pairs of I, grouped by face. Memoized on I.
inline Cover standard_cover(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  if (auto cached = i.cached_cover()) return *cached;
  if (i.is_empty()) throw DomainError("the empty ideal has no standard cover");

  const MonoidPtr& q = i.ambient_ptr();
  const FaceIndex top = q->top_face();
  const std::vector<IntVector>& gens = i.generators();
  const std::size_t k = gens.size();
  auto report = [&](std::size_t done) {
    if (!opts.progress) return;
    opts.progress("Cover for " + std::to_string(done) + (done == 1 ? " generator" : " generators") +
                  " was calculated. " + std::to_string(k - done) + " generators are left.");
  };

  Cover c = pair_difference(q, zero_vector(q->dim()), top, gens[0], top);
  report(1);
  for (std::size_t n = 1; n < k; ++n) {
    Cover split;
    for (const ProperPair& p : c.pairs()) split.merge(pair_difference(q, p.base(), p.face(), gens[n], top));
    const std::vector<IntVector> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(n + 1));
    c = detail::cover_to_standard(std::move(split), *q, prefix, "", opts.loop_cap);
    report(n + 1);
  }
  c = retag(c, i.hash_string());
  i.store_cover(c);
  return c;
}

/// P coincides with one of the standard pairs of I.
inline bool is_maximal(const ProperPair& p, const MonomialIdeal& i, const CoverOptions& opts = {}) {
  const Cover c = standard_cover(i, opts);
  auto it = c.buckets().find(p.face());
  if (it == c.buckets().end()) return false;
  for (const ProperPair& s : it->second)
    if (s.base() == p.base()) return true;
  return false;
}

}  // namespace stdpairs
