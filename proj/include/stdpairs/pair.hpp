#pragma once

// Value types shared by the pair, cover and decomposition algorithms.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stdpairs/integer.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/polyhedral.hpp"

namespace stdpairs {

/// A pair (a, F): the translate a + NF of a face of the ambient monoid,
/// tagged with the hash of the ideal it was checked against ("" for the
/// empty ideal).
class ProperPair {
 public:
  ProperPair(IntVector base, FaceIndex face, MonoidPtr monoid, std::string ideal_hash = {})
      : base_(std::move(base)),
        face_(std::move(face)),
        monoid_(std::move(monoid)),
        ideal_hash_(std::move(ideal_hash)) {}

  const IntVector& base() const noexcept { return base_; }
  const FaceIndex& face() const noexcept { return face_; }
  const MonoidPtr& monoid() const noexcept { return monoid_; }
  const std::string& ideal_hash() const noexcept { return ideal_hash_; }
  IntMatrix face_matrix() const { return monoid_->face(face_); }

  /// The same translate, re-anchored to another ideal.
  ProperPair with_ideal(std::string ideal_hash) const {
    return ProperPair(base_, face_, monoid_, std::move(ideal_hash));
  }

  std::string str() const {
    std::ostringstream os;
    os << '(' << base_ << ", " << face_.str() << ')';
    return os.str();
  }

  std::string hash_string() const { return ideal_hash_ + "#" + to_string(base_, ",") + "@" + face_.str(); }

  friend bool operator==(const ProperPair& a, const ProperPair& b) {
    return a.base_ == b.base_ && a.face_ == b.face_ && a.ideal_hash_ == b.ideal_hash_;
  }
  friend bool operator<(const ProperPair& a, const ProperPair& b) {
    if (!(a.face_ == b.face_)) return a.face_ < b.face_;
    return a.base_ < b.base_;
  }

 private:
  IntVector base_;
  FaceIndex face_;
  MonoidPtr monoid_;
  std::string ideal_hash_;
};

/// Pairs grouped by face. Buckets are kept sorted by base with no
/// duplicates; empty buckets are never stored.
class Cover {
 public:
  using Bucket = std::vector<ProperPair>;

  void add(ProperPair p) {
    Bucket& b = buckets_[p.face()];
    auto it = std::lower_bound(b.begin(), b.end(), p,
                               [](const ProperPair& x, const ProperPair& y) { return x.base() < y.base(); });
    if (it != b.end() && it->base() == p.base()) return;
    b.insert(it, std::move(p));
  }

  void merge(const Cover& other) {
    for (const auto& [f, b] : other.buckets_)
      for (const ProperPair& p : b) add(p);
  }

  const std::map<FaceIndex, Bucket>& buckets() const noexcept { return buckets_; }

  std::vector<ProperPair> pairs() const {
    std::vector<ProperPair> out;
    for (const auto& [f, b] : buckets_) out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [f, b] : buckets_) n += b.size();
    return n;
  }
  bool empty() const noexcept { return buckets_.empty(); }

  /// Same faces and same bases; ideal tags are ignored.
  bool same_pairs(const Cover& other) const {
    if (buckets_.size() != other.buckets_.size()) return false;
    for (auto a = buckets_.begin(), b = other.buckets_.begin(); a != buckets_.end(); ++a, ++b) {
      if (!(a->first == b->first) || a->second.size() != b->second.size()) return false;
      for (std::size_t i = 0; i < a->second.size(); ++i)
        if (a->second[i].base() != b->second[i].base()) return false;
    }
    return true;
  }

  /// "{(0, 3): [(0, 0, 0), (1, 0, 1)], ...}"
  std::string str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [f, b] : buckets_) {
      if (!first) os << ", ";
      first = false;
      os << f.str() << ": [";
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) os << ", ";
        os << b[i].base();
      }
      os << ']';
    }
    os << '}';
    return os.str();
  }

 private:
  std::map<FaceIndex, Bucket> buckets_;
};

/// A block of standard pairs over one face, connected through pairwise
/// intersecting translates.
struct OverlapClass {
  FaceIndex face;
  std::vector<ProperPair> pairs;

  friend bool operator==(const OverlapClass& a, const OverlapClass& b) {
    if (!(a.face == b.face) || a.pairs.size() != b.pairs.size()) return false;
    for (std::size_t i = 0; i < a.pairs.size(); ++i)
      if (a.pairs[i].base() != b.pairs[i].base()) return false;
    return true;
  }
};

using OverlapMap = std::map<FaceIndex, std::vector<OverlapClass>>;

}  // namespace stdpairs
