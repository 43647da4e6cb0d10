#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/integer.hpp"
#include "stdpairs/polyhedral.hpp"

namespace stdpairs {

/// A pointed affine semigroup NA with its face lattice and support data.
///
/// Zero columns and repeated columns of the input are dropped; the order of
/// the surviving columns is kept, and face indices refer to that order.
/// Instances are immutable and shared through MonoidPtr.
class AffineMonoid {
 public:
  explicit AffineMonoid(const IntMatrix& a) {
    std::vector<IntVector> kept;
    for (IntVector& c : a.column_list()) {
      if (is_zero(c)) continue;
      if (std::find(kept.begin(), kept.end(), c) != kept.end()) continue;
      kept.push_back(std::move(c));
    }
    gens_ = IntMatrix::from_columns(a.rows(), kept);
    columns_ = kept;
    if (!is_pointed(gens_)) throw NotPointedError();
    cone_ = std::make_unique<ConeData>(gens_);
    if (!cone_->lattice.empty() && gens_.cols() > 0) {
      for (const FaceIndex& f : cone_->lattice)
        if (!f.is_bottom()) supports_.emplace(f, cone_->supports(gens_, f));
    } else {
      supports_.emplace(FaceIndex(), IntMatrix(0, gens_.rows()));
    }

    std::vector<IntVector> minimal;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      std::vector<IntVector> others;
      for (std::size_t k = 0; k < columns_.size(); ++k)
        if (k != j) others.push_back(columns_[k]);
      const IntMatrix rest = IntMatrix::from_columns(gens_.rows(), others);
      if (min_nonneg_solutions(rest, columns_[j]).empty()) minimal.push_back(columns_[j]);
    }
    std::sort(minimal.begin(), minimal.end());
    mingens_ = IntMatrix::from_columns(gens_.rows(), minimal);

    std::ostringstream os;
    os << gens_.rows();
    for (const IntVector& c : minimal) os << '|' << to_string(c, ",");
    hash_ = os.str();
  }

  const IntMatrix& gens() const noexcept { return gens_; }
  const IntMatrix& mingens() const noexcept { return mingens_; }
  const std::vector<IntVector>& columns() const noexcept { return columns_; }
  const IntVector& column(std::size_t j) const { return columns_.at(j); }
  std::size_t dim() const noexcept { return gens_.rows(); }
  std::size_t ngens() const noexcept { return gens_.cols(); }
  bool is_empty() const noexcept { return gens_.cols() == 0; }

  const ConeData& cone() const noexcept { return *cone_; }
  const FaceLattice& face_lattice() const noexcept { return cone_->lattice; }
  bool has_face(const FaceIndex& f) const { return cone_->has_face(f); }
  FaceIndex top_face() const { return cone_->lattice.back(); }
  FaceIndex zero_face() const { return FaceIndex(); }

  const std::map<FaceIndex, SupportMatrix>& integral_support_vectors() const noexcept {
    return supports_;
  }
  const SupportMatrix& supports(const FaceIndex& f) const {
    auto it = supports_.find(f);
    if (it == supports_.end()) throw DomainError("not a face of the monoid: " + f.str());
    return it->second;
  }

  /// Faces G (not bottom) with F contained in G, in lattice order.
  std::vector<FaceIndex> faces_containing(const FaceIndex& f) const {
    std::vector<FaceIndex> out;
    for (const FaceIndex& g : cone_->lattice)
      if (!g.is_bottom() && g.contains(f)) out.push_back(g);
    return out;
  }

  /// Minimal x >= 0 with A x = b; empty iff b is not in NA.
  SolutionSet contains(const IntVector& b) const {
    if (b.size() != dim()) throw ContractError("vector dimension does not match monoid");
    return min_nonneg_solutions(gens_, b);
  }
  bool is_element(const IntVector& b) const { return !contains(b).empty(); }

  /// b <= c in the monoid order, i.e. c - b in NA.
  bool divides(const IntVector& b, const IntVector& c) const { return is_element(c - b); }

  IntMatrix face(const FaceIndex& f) const {
    if (f.is_bottom() || !has_face(f)) throw DomainError("not a face of the monoid: " + f.str());
    return gens_.select_columns(f.indices());
  }

  FaceIndex index_of_face(const IntMatrix& m) const {
    if (m.rows() != dim() && m.cols() != 0) throw ContractError("face matrix dimension mismatch");
    std::vector<std::size_t> idx;
    for (const IntVector& c : m.column_list()) {
      auto it = std::find(columns_.begin(), columns_.end(), c);
      if (it == columns_.end()) throw DomainError("column is not a generator of the monoid");
      idx.push_back(static_cast<std::size_t>(it - columns_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    FaceIndex f(std::move(idx));
    if (!has_face(f)) throw DomainError("columns do not form a face: " + f.str());
    return f;
  }

  /// Canonical text; equal for monoids with the same minimal generators.
  const std::string& hash_string() const noexcept { return hash_; }

  friend bool operator==(const AffineMonoid& a, const AffineMonoid& b) { return a.hash_ == b.hash_; }

 private:
  IntMatrix gens_;
  IntMatrix mingens_;
  std::vector<IntVector> columns_;
  std::unique_ptr<ConeData> cone_;
  std::map<FaceIndex, SupportMatrix> supports_;
  std::string hash_;
};

using MonoidPtr = std::shared_ptr<const AffineMonoid>;

inline MonoidPtr new_monoid(const IntMatrix& a) { return std::make_shared<const AffineMonoid>(a); }

inline IntMatrix minimal_generators(const AffineMonoid& q) { return q.mingens(); }

inline SolutionSet monoid_contains(const AffineMonoid& q, const IntVector& b) { return q.contains(b); }

inline IntMatrix face_submatrix(const AffineMonoid& q, const FaceIndex& f) { return q.face(f); }

inline FaceIndex index_of_face(const AffineMonoid& q, const IntMatrix& m) { return q.index_of_face(m); }

inline const std::string& hash_of_monoid(const AffineMonoid& q) { return q.hash_string(); }

}  // namespace stdpairs
