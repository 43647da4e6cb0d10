#pragma once

// Rational cone geometry of a generating matrix: facet normals by double
// description, the face lattice as column index sets, support vectors.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/integer.hpp"

namespace stdpairs {

/// A face of cone(A), identified by the strictly increasing set of column
/// positions of A lying on it. The empty index set is the zero face of a
/// pointed cone; the distinguished bottom element is the empty face and
/// prints as "(-1,)".
class FaceIndex {
 public:
  FaceIndex() = default;
  explicit FaceIndex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
      throw ContractError("face index contains a repeated column");
  }
  FaceIndex(std::initializer_list<std::size_t> indices)
      : FaceIndex(std::vector<std::size_t>(indices)) {}

  static FaceIndex bottom() {
    FaceIndex f;
    f.bottom_ = true;
    return f;
  }

  bool is_bottom() const noexcept { return bottom_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

  /// True when `other` is a subset of this face (bottom lies below everything).
  bool contains(const FaceIndex& other) const {
    if (other.bottom_) return true;
    if (bottom_) return false;
    return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(),
                         other.indices_.end());
  }

  std::string str() const {
    if (bottom_) return "(-1,)";
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < indices_.size(); ++i) {
      if (i) os << ", ";
      os << indices_[i];
    }
    if (indices_.size() == 1) os << ',';
    os << ')';
    return os.str();
  }

  friend bool operator==(const FaceIndex& a, const FaceIndex& b) {
    return a.bottom_ == b.bottom_ && a.indices_ == b.indices_;
  }
  // Bottom first, then by size, then lexicographically.
  friend bool operator<(const FaceIndex& a, const FaceIndex& b) {
    if (a.bottom_ != b.bottom_) return a.bottom_;
    if (a.indices_.size() != b.indices_.size()) return a.indices_.size() < b.indices_.size();
    return a.indices_ < b.indices_;
  }

 private:
  bool bottom_ = false;
  std::vector<std::size_t> indices_;
};

/// All faces of cone(A) in linear-extension order (bottom first, top last).
using FaceLattice = std::vector<FaceIndex>;

/// Rows are primitive integer inner normals, sorted lexicographically.
using SupportMatrix = IntMatrix;

namespace detail {

// Extreme rays of the pointed cone {z : G z >= 0}, G of full column rank.
inline std::vector<IntVector> double_description(const IntMatrix& g) {
  const std::size_t r = g.cols();
  const std::size_t n = g.rows();
  if (r == 0 || n == 0) return {};

  // Choose r independent rows for the initial simplicial cone.
  auto gt = to_rational(g.transpose());
  const std::vector<std::size_t> basis_rows = rref(gt, n);
  if (basis_rows.size() != r) throw ContractError("double description needs full column rank");

  // Rays of {z : G_K z >= 0} are the columns of G_K^{-1}.
  RationalMatrix aug(r, std::vector<Rational>(2 * r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug[i][j] = Rational(g(basis_rows[i], j));
    aug[i][r + i] = 1;
  }
  rref(aug, 2 * r);
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < r; ++k) {
    std::vector<Rational> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = aug[i][r + k];
    rays.push_back(clear_denominators(col));
  }

  const std::vector<IntVector> rows = g.row_list();
  std::vector<std::size_t> processed(basis_rows.begin(), basis_rows.end());
  std::vector<bool> done(n, false);
  for (std::size_t k : basis_rows) done[k] = true;

  auto tight_rank = [&](const IntVector& p, const IntVector& q) {
    std::vector<IntVector> tight;
    for (std::size_t k : processed)
      if (dot(rows[k], p) == 0 && dot(rows[k], q) == 0) tight.push_back(rows[k]);
    if (tight.empty()) return std::size_t{0};
    return rational_rank(IntMatrix::from_rows(r, tight));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<IntVector> pos, neg, keep;
    std::vector<Int> pos_val, neg_val;
    for (const IntVector& ray : rays) {
      const Int v = dot(rows[i], ray);
      if (v > 0) {
        pos.push_back(ray);
        pos_val.push_back(v);
        keep.push_back(ray);
      } else if (v < 0) {
        neg.push_back(ray);
        neg_val.push_back(v);
      } else {
        keep.push_back(ray);
      }
    }
    if (r >= 2) {
      for (std::size_t a = 0; a < pos.size(); ++a)
        for (std::size_t b = 0; b < neg.size(); ++b) {
          if (tight_rank(pos[a], neg[b]) != r - 2) continue;
          keep.push_back(primitive(pos_val[a] * neg[b] - neg_val[b] * pos[a]));
        }
    }
    rays = std::move(keep);
    processed.push_back(i);
    done[i] = true;
  }
  sort_unique(rays);
  return rays;
}

}  // namespace detail

/// Facet structure of cone(A), computed once.
struct ConeData {
  std::vector<IntVector> facets;                        // primitive inner normals
  std::vector<std::vector<std::size_t>> facet_columns;  // columns on each facet
  std::vector<IntVector> equations;                     // +-pairs spanning span(A)^perp
  FaceLattice lattice;

  explicit ConeData(const IntMatrix& a) {
    const std::size_t n = a.cols();
    const std::size_t d = a.rows();
    if (n == 0 || d == 0) {
      lattice = {FaceIndex::bottom(), FaceIndex()};
      return;
    }
    for (IntVector& v : kernel_basis(a.transpose())) {
      equations.push_back(-Int(1) * v);
      equations.push_back(std::move(v));
    }

    // Parametrize span(A) by independent columns B; normals are B z with
    // A^T B z >= 0.
    auto ar = detail::to_rational(a);
    const std::vector<std::size_t> pivots = detail::rref(ar, n);
    const IntMatrix basis = a.select_columns(pivots);
    for (const IntVector& z : detail::double_description(a.transpose() * basis))
      facets.push_back(primitive(basis * z));
    sort_unique(facets);

    const std::vector<IntVector> cols = a.column_list();
    for (const IntVector& phi : facets) {
      std::vector<std::size_t> on;
      for (std::size_t j = 0; j < n; ++j)
        if (dot(phi, cols[j]) == 0) on.push_back(j);
      facet_columns.push_back(std::move(on));
    }

    std::vector<std::size_t> all(n);
    for (std::size_t j = 0; j < n; ++j) all[j] = j;
    std::set<std::vector<std::size_t>> faces{all};
    std::vector<std::vector<std::size_t>> work{all};
    while (!work.empty()) {
      std::vector<std::size_t> f = std::move(work.back());
      work.pop_back();
      for (const auto& h : facet_columns) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), h.begin(), h.end(), std::back_inserter(meet));
        if (faces.insert(meet).second) work.push_back(std::move(meet));
      }
    }
    lattice.push_back(FaceIndex::bottom());
    for (const auto& f : faces) lattice.emplace_back(f);
    std::sort(lattice.begin(), lattice.end());
  }

  std::vector<IntVector> all_normals() const {
    std::vector<IntVector> rows = facets;
    rows.insert(rows.end(), equations.begin(), equations.end());
    sort_unique(rows);
    return rows;
  }

  bool has_face(const FaceIndex& f) const {
    return std::binary_search(lattice.begin(), lattice.end(), f);
  }

  /// Normals (facets and equations) vanishing on every column of `f`.
  SupportMatrix supports(const IntMatrix& a, const FaceIndex& f) const {
    if (!has_face(f)) throw DomainError("not a face of the cone: " + f.str());
    std::vector<IntVector> rows;
    for (std::size_t k = 0; k < facets.size(); ++k)
      if (f.is_bottom() || std::includes(facet_columns[k].begin(), facet_columns[k].end(),
                                         f.indices().begin(), f.indices().end()))
        rows.push_back(facets[k]);
    rows.insert(rows.end(), equations.begin(), equations.end());
    sort_unique(rows);
    return IntMatrix::from_rows(a.rows(), rows);
  }
};

/// One primitive inner normal per facet of cone(A), plus +-pairs spanning the
/// orthogonal complement of span(A) when the cone is not full-dimensional.
inline SupportMatrix facet_normals(const IntMatrix& a) {
  if (a.empty()) return IntMatrix(0, a.rows());
  return IntMatrix::from_rows(a.rows(), ConeData(a).all_normals());
}

inline FaceLattice face_lattice(const IntMatrix& a) { return ConeData(a).lattice; }

inline SupportMatrix support_vectors_of_face(const IntMatrix& a, const FaceIndex& f) {
  return ConeData(a).supports(a, f);
}

/// True iff cone(A) contains no line.
inline bool is_pointed(const IntMatrix& a) {
  if (a.cols() == 0 || a.rows() == 0) return true;
  return rational_rank(facet_normals(a)) == a.rows();
}

}  // namespace stdpairs
