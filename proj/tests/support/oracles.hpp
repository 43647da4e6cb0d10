#pragma once

// Brute-force references for the test suites. Everything here enumerates
// boxes of small machine integers and shares no code with the library
// beyond the conversion helpers at the top.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "stdpairs/stdpairs.hpp"

namespace oracle {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;  // row-major

inline Vec to_vec(const stdpairs::IntVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(static_cast<long long>(x));
  return out;
}

inline stdpairs::IntVector to_int(const Vec& v) {
  stdpairs::IntVector out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

inline Mat to_mat(const stdpairs::IntMatrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<long long>(m(r, c));
  return out;
}

inline stdpairs::IntMatrix to_int(const Mat& m, std::size_t cols) {
  std::vector<stdpairs::IntVector> rows;
  for (const Vec& r : m) rows.push_back(to_int(r));
  return stdpairs::IntMatrix::from_rows(cols, rows);
}

inline Vec column(const Mat& a, std::size_t j) {
  Vec c;
  for (const Vec& r : a) c.push_back(r[j]);
  return c;
}

inline std::size_t ncols(const Mat& a) { return a.empty() ? 0 : a.front().size(); }

inline Vec times(const Mat& a, const Vec& x) {
  Vec out(a.size(), 0);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += a[r][c] * x[c];
  return out;
}

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Calls f on every x in [0, bound]^n.
inline void for_box(std::size_t n, long long bound, const std::function<void(const Vec&)>& f) {
  Vec x(n, 0);
  while (true) {
    f(x);
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (x[k] < bound) {
        ++x[k];
        break;
      }
      x[k] = 0;
    }
    if (k == n) return;
  }
}

/// Componentwise-minimal solutions of M x = b with x in [0, bound]^c,
/// sorted lexicographically.
inline std::vector<Vec> min_solutions(const Mat& m, const Vec& b, std::size_t cols, long long bound) {
  std::vector<Vec> all;
  for_box(cols, bound, [&](const Vec& x) {
    if (times(m, x) == b) all.push_back(x);
  });
  std::vector<Vec> out;
  for (const Vec& x : all) {
    bool minimal = true;
    for (const Vec& y : all)
      if (y != x && leq(y, x)) minimal = false;
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Some integer w in [-r, r]^d with w . a_j > 0 for every column; none when
/// the search fails.
inline std::optional<Vec> positive_functional(const Mat& a, long long r = 4) {
  const std::size_t d = a.size();
  std::optional<Vec> found;
  Vec w(d, -r);
  while (!found) {
    bool ok = true;
    for (std::size_t j = 0; j < ncols(a) && ok; ++j) {
      long long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += w[i] * a[i][j];
      ok = s > 0;
    }
    if (ok) found = w;
    std::size_t k = 0;
    for (; k < d; ++k) {
      if (w[k] < r) {
        ++w[k];
        break;
      }
      w[k] = -r;
    }
    if (k == d) break;
  }
  return found;
}

/// The affine semigroup spanned by the columns of a pointed matrix, with
/// membership decided by enumeration under a positive functional.
class Semigroup {
 public:
  explicit Semigroup(Mat a) : a_(std::move(a)) {
    if (auto w = positive_functional(a_)) w_ = *w;
    else if (ncols(a_) > 0) throw std::logic_error("oracle needs a pointed matrix");
  }

  const Mat& gens() const { return a_; }
  std::size_t dim() const { return a_.size(); }
  std::size_t ngens() const { return ncols(a_); }

  /// b in N(columns in cols).
  bool contains(const Vec& b, const std::vector<std::size_t>& cols) const {
    if (cols.empty()) return std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; });
    long long level = 0;
    for (std::size_t i = 0; i < b.size(); ++i) level += w_[i] * b[i];
    if (level < 0) return false;
    return search(b, cols, 0);
  }
  bool contains(const Vec& b) const { return contains(b, all_columns()); }

  std::vector<std::size_t> all_columns() const {
    std::vector<std::size_t> c(ngens());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = j;
    return c;
  }

  /// {A x : x in [0, bound]^n}.
  std::set<Vec> box(long long bound) const {
    std::set<Vec> out;
    for_box(ngens(), bound, [&](const Vec& x) { out.insert(times(a_, x)); });
    return out;
  }

 private:
  bool search(const Vec& b, const std::vector<std::size_t>& cols, std::size_t k) const {
    if (std::all_of(b.begin(), b.end(), [](long long v) { return v == 0; })) return true;
    if (k == cols.size()) return false;
    const Vec c = column(a_, cols[k]);
    long long step = 0;
    for (std::size_t i = 0; i < b.size(); ++i) step += w_[i] * c[i];
    long long level = 0;
    for (std::size_t i = 0; i < b.size(); ++i) level += w_[i] * b[i];
    Vec rest = b;
    for (long long t = 0; t * step <= level; ++t) {
      if (search(rest, cols, k + 1)) return true;
      rest = sub(rest, c);
    }
    return false;
  }

  Mat a_;
  Vec w_;
};

inline bool in_ideal(const Semigroup& q, const std::vector<Vec>& gens, const Vec& b) {
  for (const Vec& g : gens)
    if (q.contains(sub(b, g))) return true;
  return false;
}

/// Some m*b lands in the ideal. m runs far enough for the multiples to
/// outgrow every generator level by a margin; past that the answer stays
/// the same in the instances we generate.
inline bool multiple_in_ideal(const Semigroup& q, const std::vector<Vec>& gens, const Vec& b) {
  const Vec w = positive_functional(q.gens()).value_or(Vec(q.dim(), 0));
  auto level = [&](const Vec& v) {
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
    return s;
  };
  long long top = 0;
  for (const Vec& g : gens) top = std::max(top, level(g));
  const long long lb = level(b);
  const long long cap = lb > 0 ? std::max<long long>(8, (top + 32) / lb + 4) : 1;
  Vec mb = b;
  for (long long m = 1; m <= cap; ++m, mb = add(mb, b))
    if (in_ideal(q, gens, mb)) return true;
  return false;
}

/// b in base + N(face columns).
inline bool in_pair(const Semigroup& q, const Vec& base, const std::vector<std::size_t>& face, const Vec& b) {
  return q.contains(sub(b, base), face);
}

/// Standard pairs of a polynomial monomial ideal by exhaustive search: all
/// proper pairs (u, V) with u in [0, bound]^m vanishing on V, kept when no
/// other proper pair (u', V') with V inside V' contains u + N^V.
inline std::set<std::pair<Vec, std::vector<std::size_t>>> poly_standard_pairs(std::size_t m, const std::vector<Vec>& gens,
                                                                             long long bound) {
  auto proper = [&](const Vec& u, unsigned mask) {
    for (const Vec& g : gens) {
      bool below = true;
      for (std::size_t i = 0; i < m; ++i)
        if (!(mask >> i & 1u) && g[i] > u[i]) below = false;
      if (below) return false;
    }
    return true;
  };
  std::vector<std::pair<Vec, unsigned>> all;
  for (unsigned mask = 0; mask < (1u << m); ++mask)
    for_box(m, bound, [&](const Vec& u) {
      for (std::size_t i = 0; i < m; ++i)
        if ((mask >> i & 1u) && u[i] != 0) return;
      if (proper(u, mask)) all.emplace_back(u, mask);
    });
  std::set<std::pair<Vec, std::vector<std::size_t>>> out;
  for (const auto& [u, mask] : all) {
    bool maximal = true;
    for (const auto& [u2, mask2] : all) {
      if (u2 == u && mask2 == mask) continue;
      if ((mask & mask2) != mask) continue;
      bool inside = true;
      for (std::size_t i = 0; i < m; ++i)
        if (!(mask2 >> i & 1u) && u[i] != u2[i]) inside = false;
        else if ((mask2 >> i & 1u) && u[i] < u2[i]) inside = false;
      if (inside) maximal = false;
    }
    if (maximal) {
      std::vector<std::size_t> v;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) v.push_back(i);
      out.emplace(u, v);
    }
  }
  return out;
}

/// Random pointed matrix: d rows, n columns, entries in [lo, hi], with no
/// zero or repeated column.
inline Mat random_pointed(std::mt19937_64& rng, std::size_t d, std::size_t n, long long lo, long long hi) {
  std::uniform_int_distribution<long long> e(lo, hi);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Mat a(d, Vec(n));
    for (auto& r : a)
      for (auto& v : r) v = e(rng);
    std::set<Vec> cols;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      const Vec c = column(a, j);
      ok = std::any_of(c.begin(), c.end(), [](long long v) { return v != 0; }) && cols.insert(c).second;
    }
    if (ok && positive_functional(a)) return a;
  }
  throw std::logic_error("no pointed matrix with distinct columns in range");
}

}  // namespace oracle
