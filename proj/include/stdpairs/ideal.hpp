#pragma once

// Monomial ideals of an affine semigroup: minimal generators, membership,
// and ideal arithmetic that needs no standard cover.

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stdpairs/diophantine.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/integer.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/pair.hpp"

namespace stdpairs {

/// Witness g + A x = b returned by ideal membership.
struct IdealWitness {
  IntVector x;
  IntVector generator;
};

/// Irreducible components stored as generator lists.
using ComponentList = std::vector<std::vector<IntVector>>;

namespace detail {

// Drops duplicates and every generator lying in the ideal of the others.
inline std::vector<IntVector> minimalize(const AffineMonoid& q, std::vector<IntVector> gens) {
  sort_unique(gens);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && q.divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

}  // namespace detail

/// A proper monomial ideal of NA held by its minimal generators.
///
/// Copies share the generator data and the memoized cover/decomposition
/// cache; the cache is filled lazily under a mutex.
class MonomialIdeal {
 public:
  MonomialIdeal(MonoidPtr q, const IntMatrix& m) : MonomialIdeal(q, m.column_list()) {
    if (m.cols() > 0 && m.rows() != q->dim()) throw ContractError("generator dimension does not match monoid");
  }

  MonomialIdeal(MonoidPtr q, std::vector<IntVector> gens) : d_(std::make_shared<Data>()) {
    for (const IntVector& g : gens) {
      if (g.size() != q->dim()) throw ContractError("generator dimension does not match monoid");
      if (is_zero(g)) throw DomainError("the unit ideal is not a proper monomial ideal");
      if (!q->is_element(g)) throw DomainError("generator " + to_string(g, ",") + " is not in the monoid");
    }
    d_->gens = detail::minimalize(*q, std::move(gens));
    d_->monoid = std::move(q);
    std::ostringstream os;
    os << d_->monoid->hash_string() << "/";
    for (std::size_t i = 0; i < d_->gens.size(); ++i) os << (i ? "|" : "") << to_string(d_->gens[i], ",");
    d_->hash = os.str();
  }

  const AffineMonoid& ambient() const noexcept { return *d_->monoid; }
  const MonoidPtr& ambient_ptr() const noexcept { return d_->monoid; }
  const std::vector<IntVector>& generators() const noexcept { return d_->gens; }
  IntMatrix gens() const { return IntMatrix::from_columns(ambient().dim(), d_->gens); }
  std::size_t ngens() const noexcept { return d_->gens.size(); }

  bool is_empty() const noexcept { return d_->gens.empty(); }
  bool is_principal() const noexcept { return d_->gens.size() == 1; }

  /// First generator g (canonical order) with b in g + NA, with the
  /// lexicographically least x such that g + A x = b.
  std::optional<IdealWitness> contains(const IntVector& b) const {
    if (b.size() != ambient().dim()) throw ContractError("vector dimension does not match monoid");
    for (const IntVector& g : d_->gens) {
      SolutionSet s = ambient().contains(b - g);
      if (!s.empty()) return IdealWitness{std::move(s.front()), g};
    }
    return std::nullopt;
  }
  bool is_element(const IntVector& b) const { return contains(b).has_value(); }

  bool is_std_monomial(const IntVector& b) const { return ambient().is_element(b) && !is_element(b); }

  const std::string& hash_string() const noexcept { return d_->hash; }

  bool same_ambient(const MonomialIdeal& o) const {
    return d_->monoid == o.d_->monoid || d_->monoid->gens() == o.d_->monoid->gens();
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.same_ambient(b) && a.d_->gens == b.d_->gens;
  }

  // Memoization. Results are computed outside the lock; the first stored
  // value wins.
  std::optional<Cover> cached_cover() const { return get(&Data::cover); }
  std::optional<OverlapMap> cached_overlap_classes() const { return get(&Data::classes); }
  std::optional<ComponentList> cached_decomposition() const { return get(&Data::decomposition); }
  void store_cover(Cover c) const { put(&Data::cover, std::move(c)); }
  void store_overlap_classes(OverlapMap m) const { put(&Data::classes, std::move(m)); }
  void store_decomposition(ComponentList c) const { put(&Data::decomposition, std::move(c)); }

  std::string str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < d_->gens.size(); ++i) os << (i ? ", " : "") << d_->gens[i];
    os << ">";
    return os.str();
  }

 private:
  struct Data {
    MonoidPtr monoid;
    std::vector<IntVector> gens;
    std::string hash;
    mutable std::mutex mutex;
    std::optional<Cover> cover;
    std::optional<OverlapMap> classes;
    std::optional<ComponentList> decomposition;
  };

  template <class T>
  std::optional<T> get(std::optional<T> Data::*field) const {
    std::lock_guard lock(d_->mutex);
    return (*d_).*field;
  }
  template <class T>
  void put(std::optional<T> Data::*field, T value) const {
    std::lock_guard lock(d_->mutex);
    if (!((*d_).*field)) (*d_).*field = std::move(value);
  }

  std::shared_ptr<Data> d_;
};

inline MonomialIdeal new_ideal(MonoidPtr q, const IntMatrix& m) { return MonomialIdeal(std::move(q), m); }

inline std::optional<IdealWitness> ideal_contains(const MonomialIdeal& i, const IntVector& b) {
  return i.contains(b);
}

inline bool is_std_monomial(const MonomialIdeal& i, const IntVector& b) { return i.is_std_monomial(b); }

namespace detail {
inline void require_same_ambient(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (!i.same_ambient(j)) throw ContractError("ideals live in different ambient monoids");
}
}  // namespace detail

/// Minimal common elements of (g + NA) and (h + NA).
inline std::vector<IntVector> common_multiples(const AffineMonoid& q, const IntVector& g, const IntVector& h) {
  const IntMatrix& a = q.gens();
  std::vector<IntVector> out;
  for (const IntVector& uv : min_nonneg_solutions(hconcat(a, -a), h - g)) {
    IntVector u(uv.begin(), uv.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    out.push_back(g + a * u);
  }
  return out;
}

inline MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<IntVector> gens;
  for (const IntVector& g : i.generators())
    for (const IntVector& h : j.generators())
      for (IntVector& m : common_multiples(i.ambient(), g, h)) gens.push_back(std::move(m));
  return MonomialIdeal(i.ambient_ptr(), std::move(gens));
}

inline MonomialIdeal add(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<IntVector> gens = i.generators();
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return MonomialIdeal(i.ambient_ptr(), std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ambient(i, j);
  std::vector<IntVector> gens;
  for (const IntVector& g : i.generators())
    for (const IntVector& h : j.generators()) gens.push_back(g + h);
  return MonomialIdeal(i.ambient_ptr(), std::move(gens));
}

inline bool equals(const MonomialIdeal& i, const MonomialIdeal& j) { return i == j; }

inline MonomialIdeal operator+(const MonomialIdeal& i, const MonomialIdeal& j) { return add(i, j); }
inline MonomialIdeal operator*(const MonomialIdeal& i, const MonomialIdeal& j) { return multiply(i, j); }

/// The prime ideal of NA \ NF, generated by the columns off F.
inline MonomialIdeal prime_ideal(const MonoidPtr& q, const FaceIndex& f) {
  if (f.is_bottom()) throw DomainError("the bottom face has no prime ideal");
  if (!q->has_face(f)) throw DomainError("not a face of the monoid: " + f.str());
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < q->ngens(); ++j)
    if (!std::binary_search(f.indices().begin(), f.indices().end(), j)) gens.push_back(q->column(j));
  return MonomialIdeal(q, std::move(gens));
}

/// Equal to the prime ideal of some face.
inline bool is_prime(const MonomialIdeal& i) {
  for (const FaceIndex& f : i.ambient().face_lattice()) {
    if (f.is_bottom()) continue;
    if (prime_ideal(i.ambient_ptr(), f) == i) return true;
  }
  return false;
}

/// The face F with I = P_F, if I is prime.
inline std::optional<FaceIndex> face_of_prime(const MonomialIdeal& i) {
  for (const FaceIndex& f : i.ambient().face_lattice()) {
    if (f.is_bottom()) continue;
    if (prime_ideal(i.ambient_ptr(), f) == i) return f;
  }
  return std::nullopt;
}

}  // namespace stdpairs
