#pragma once

// Exact integer linear algebra: minimal nonnegative integer solutions of
// linear Diophantine systems and rational rank / kernel computations.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "stdpairs/errors.hpp"
#include "stdpairs/integer.hpp"

namespace stdpairs {

/// Componentwise-minimal nonnegative solutions, sorted lexicographically.
using SolutionSet = std::vector<IntVector>;

namespace detail {

// Contejean-Devie completion. Breadth-first over total degree: a partial
// vector x is extended by e_j only when <Mx, Me_j> < 0, and is dropped once
// it dominates a solution already found. Coordinate `capped`, if set, is
// never raised above 1.
inline std::vector<IntVector> contejean_devie(const IntMatrix& m,
                                              std::optional<std::size_t> capped) {
  const std::size_t n = m.cols();
  const std::vector<IntVector> images = m.column_list();
  std::vector<IntVector> found;

  struct Node {
    IntVector x;
    IntVector image;
  };
  auto dominates_found = [&found](const IntVector& x) {
    for (const IntVector& s : found)
      if (leq(s, x)) return true;
    return false;
  };

  std::vector<Node> level;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector x = zero_vector(n);
    x[j] = 1;
    level.push_back({std::move(x), images[j]});
  }

  while (!level.empty()) {
    std::vector<const Node*> open;
    for (const Node& node : level) {
      if (is_zero(node.image))
        found.push_back(node.x);
      else
        open.push_back(&node);
    }
    std::set<IntVector> seen;
    std::vector<Node> next;
    for (const Node* node : open) {
      for (std::size_t j = 0; j < n; ++j) {
        if (capped && j == *capped && node->x[j] >= 1) continue;
        if (dot(node->image, images[j]) >= 0) continue;
        IntVector x = node->x;
        x[j] += 1;
        if (seen.count(x) || dominates_found(x)) continue;
        seen.insert(x);
        next.push_back({std::move(x), node->image + images[j]});
      }
    }
    level = std::move(next);
  }
  return found;
}

}  // namespace detail

/// Minimal nonzero elements of {x in N^c : Mx = 0}.
inline SolutionSet hilbert_kernel(const IntMatrix& m) {
  SolutionSet basis = detail::contejean_devie(m, std::nullopt);
  sort_unique(basis);
  return basis;
}

/// Componentwise-minimal elements of {x in N^c : Mx = b}; empty when the
/// system has no nonnegative integer solution.
inline SolutionSet min_nonneg_solutions(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw ContractError("right-hand side dimension does not match matrix rows");
  const std::size_t c = m.cols();
  // Homogenize with a slack column -b whose coefficient is capped at 1;
  // Hilbert basis elements with slack 1 are exactly the minimal solutions.
  IntMatrix aug(m.rows(), c + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
    aug(i, c) = -b[i];
  }
  SolutionSet out;
  for (IntVector& s : detail::contejean_devie(aug, c)) {
    if (s[c] != 1) continue;
    s.pop_back();
    out.push_back(std::move(s));
  }
  sort_unique(out);
  return out;
}

namespace detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (Rational& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] -= f * a[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline IntVector clear_denominators(const std::vector<Rational>& v) {
  Int l = 1;
  for (const Rational& x : v) {
    const Int d = boost::multiprecision::denominator(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
  return primitive(std::move(out));
}

}  // namespace detail

/// Rank over the rationals.
inline std::size_t rational_rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  auto a = detail::to_rational(m);
  return detail::rref(a, m.cols()).size();
}

/// Primitive integer basis of the rational right kernel {x : Mx = 0}.
inline std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  const std::size_t c = m.cols();
  auto a = detail::to_rational(m);
  const auto pivots = m.rows() ? detail::rref(a, c) : std::vector<std::size_t>{};
  std::vector<bool> is_pivot(c, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(c, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(detail::clear_denominators(v));
  }
  return basis;
}

}  // namespace stdpairs
