#pragma once

// Operations on pairs (a, F): properness, membership, divisibility,
// intersection and containment of translates.

#include <string>
#include <vector>

#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/pair.hpp"

namespace stdpairs {

/// (a + NF) misses g + NA for every generator g.
inline bool is_proper(const AffineMonoid& q, const std::vector<IntVector>& ideal_gens, const IntVector& a,
                      const FaceIndex& f) {
  const IntMatrix system = hconcat(q.face(f), -q.gens());
  for (const IntVector& g : ideal_gens)
    if (!min_nonneg_solutions(system, g - a).empty()) return false;
  return true;
}

inline ProperPair new_pair(const IntVector& a, const FaceIndex& f, const MonomialIdeal& i,
                           bool skip_check = false) {
  const AffineMonoid& q = i.ambient();
  if (a.size() != q.dim()) throw ContractError("pair base dimension does not match monoid");
  if (f.is_bottom() || !q.has_face(f)) throw DomainError("not a face of the monoid: " + f.str());
  if (!q.is_element(a)) throw DomainError("pair base " + to_string(a, ",") + " is not in the monoid");
  if (!skip_check && !is_proper(q, i.generators(), a, f))
    throw NotProperError("pair (" + to_string(a, ",") + ", " + f.str() + ") is not proper for the ideal");
  return ProperPair(a, f, i.ambient_ptr(), i.hash_string());
}

/// Minimal x with a + F x = b; empty iff b is not in a + NF.
inline SolutionSet pair_contains(const ProperPair& p, const IntVector& b) {
  return min_nonneg_solutions(p.face_matrix(), b - p.base());
}

/// Rows [u; w] with a + A u = b + G w, witnessing a + A u + NF inside b + NG.
/// Empty iff (a, F) does not divide (b, G); F must be a subset of G.
inline std::vector<IntVector> divides(const ProperPair& p, const ProperPair& p2) {
  if (!(p.monoid() == p2.monoid() || p.monoid()->gens() == p2.monoid()->gens()))
    throw ContractError("pairs live in different ambient monoids");
  if (!p2.face().contains(p.face())) return {};
  const AffineMonoid& q = *p.monoid();
  return min_nonneg_solutions(hconcat(q.gens(), -p2.face_matrix()), p2.base() - p.base());
}

/// Minimal [u; v] with a + F u = b + G v; nonempty iff the translates meet.
inline SolutionSet intersect_pairs(const AffineMonoid& q, const IntVector& a, const FaceIndex& f,
                                   const IntVector& b, const FaceIndex& g) {
  return min_nonneg_solutions(hconcat(q.face(f), -q.face(g)), b - a);
}

inline SolutionSet intersect_pairs(const ProperPair& p, const ProperPair& p2) {
  return intersect_pairs(*p.monoid(), p.base(), p.face(), p2.base(), p2.face());
}

/// a + NF is a subset of b + NG.
inline bool pair_subset(const AffineMonoid& q, const IntVector& a, const FaceIndex& f, const IntVector& b,
                        const FaceIndex& g) {
  if (!g.contains(f)) return false;
  return !min_nonneg_solutions(q.face(g), a - b).empty();
}

inline bool pair_subset(const ProperPair& p, const ProperPair& p2) {
  return pair_subset(*p.monoid(), p.base(), p.face(), p2.base(), p2.face());
}

}  // namespace stdpairs
