#pragma once

// Macaulay2 script emission: the semigroup ring as a Normaliz monomial
// subalgebra, the ideal as a generator list and the standard cover as a
// nested list {{base, {face generators}}, ...}.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/integer.hpp"
#include "stdpairs/pair.hpp"

namespace stdpairs {

/// Monomial a^i*b^j*... for an exponent vector; "1" for zero.
inline std::string m2_monomial(const IntVector& v) {
  if (v.size() > 26) throw DomainError("Macaulay2 export supports at most 26 variables");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw DomainError("Macaulay2 export needs nonnegative exponents");
    if (v[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += static_cast<char>('a' + i);
    if (v[i] > 1) out += '^' + v[i].str();
  }
  return out.empty() ? "1" : out;
}

inline std::string m2_list(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

/// Generator list in lexicographic order of exponent vectors.
inline std::string m2_ideal_list(const MonomialIdeal& i) {
  std::vector<std::string> items;
  for (const IntVector& g : i.generators()) items.push_back(m2_monomial(g));
  return m2_list(items);
}

inline std::string m2_monoid_list(const AffineMonoid& q) {
  std::vector<std::string> items;
  for (const IntVector& c : q.columns()) items.push_back(m2_monomial(c));
  return m2_list(items);
}

/// Faces in lattice order; within a face, pairs by decreasing
/// lexicographically least factorization of the base.
inline std::string m2_cover_list(const AffineMonoid& q, const Cover& c) {
  std::vector<std::string> items;
  for (const auto& [f, bucket] : c.buckets()) {
    std::vector<std::string> face_gens;
    for (std::size_t j : f.indices()) face_gens.push_back(m2_monomial(q.column(j)));
    const std::string face_text = m2_list(face_gens);

    std::vector<std::pair<IntVector, const ProperPair*>> keyed;
    for (const ProperPair& p : bucket) {
      const SolutionSet x = q.contains(p.base());
      if (x.empty()) throw DomainError("cover base " + to_string(p.base(), ",") + " is not in the monoid");
      keyed.emplace_back(x.front(), &p);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return r.first < l.first; });
    for (const auto& [x, p] : keyed) items.push_back("{" + m2_monomial(p->base()) + ", " + face_text + "}");
  }
  return m2_list(items);
}

/// A self-contained Macaulay2 script defining R, S, I and StandardCover.
inline std::string export_macaulay2(const MonomialIdeal& i, const Cover& cover) {
  const AffineMonoid& q = i.ambient();
  const std::size_t d = q.dim();
  if (d > 26) throw DomainError("Macaulay2 export supports at most 26 variables");
  std::vector<std::string> vars;
  for (std::size_t k = 0; k < d; ++k) vars.emplace_back(1, static_cast<char>('a' + k));

  std::ostringstream os;
  os << "loadPackage \"Normaliz\";\n";
  const std::string var_list = m2_list(vars);
  os << "R = QQ[" << var_list.substr(1, var_list.size() - 2) << "];\n";
  os << "S = createMonomialSubalgebra " << m2_monoid_list(q) << ";\n";
  os << "I = " << m2_ideal_list(i) << ";\n";
  os << "StandardCover = " << m2_cover_list(q, cover) << ";\n";
  return os.str();
}

}  // namespace stdpairs
