#pragma once

// Arbitrary-precision integer vectors and matrices.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stdpairs/errors.hpp"

namespace stdpairs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;

inline IntVector make_vector(std::initializer_list<long long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long long x : values) v.emplace_back(x);
  return v;
}

inline IntVector zero_vector(std::size_t dim) { return IntVector(dim, Int(0)); }

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_nonnegative(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

/// Componentwise a <= b.
inline bool leq(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ContractError("vector dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ContractError("vector dimension mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVector operator*(const Int& s, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ContractError("vector dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(IntVector v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

inline IntVector concat(const IntVector& a, const IntVector& b) {
  IntVector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline std::string to_string(const IntVector& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

/// Dense integer matrix stored row-major. A generating matrix holds its
/// monoid generators as columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Row-wise literal, e.g. IntMatrix{{1, 2}, {0, 2}}.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ContractError("ragged matrix literal");
      for (long long x : r) data_.emplace_back(x);
    }
  }

  static IntMatrix from_rows(std::size_t cols, std::span<const IntVector> rows) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ContractError("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw ContractError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<IntVector> row_list() const {
    std::vector<IntVector> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
  }

  std::vector<IntVector> column_list() const {
    std::vector<IntVector> c;
    c.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) c.push_back(column(j));
    return c;
  }

  IntMatrix select_columns(std::span<const std::size_t> idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= cols_) throw ContractError("column index out of range");
      for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
    }
    return m;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix m = *this;
    for (Int& x : m.data_) x = -x;
    return m;
  }

  IntVector operator*(const IntVector& x) const {
    if (x.size() != cols_) throw ContractError("matrix-vector dimension mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

  IntMatrix operator*(const IntMatrix& b) const {
    if (cols_ != b.rows_) throw ContractError("matrix product dimension mismatch");
    IntMatrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// [a b], both with the same row count.
inline IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw ContractError("hconcat row mismatch");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[' << to_string(m.row(i), ", ") << ']';
  }
  return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  return os << '(' << to_string(v, ", ") << ')';
}

/// Sorts and removes duplicates (lexicographic order).
inline void sort_unique(std::vector<IntVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace stdpairs
