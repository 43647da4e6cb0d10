#pragma once

// Text archive "STDPAIRS v1": a monoid, optionally an ideal with its cached
// results, or a bare cover.
//
//   STDPAIRS v1
//   MONOID
//   <rows> <cols>
//   <row> ...
//   IDEAL
//   <rows> <cols>
//   <row> ...
//   COVER <faces>
//   FACE <face> <count>
//   <base>
//   OVERLAP <faces>
//   FACE <face> <classes>
//   CLASS <count>
//   <base>
//   ASSOCIATED <count>
//   <face>
//   DECOMPOSITION <count>
//   <rows> <cols>
//   <row> ...
//   END
//
// Faces print as "(0, 3)", "()" or "(-1,)". Blank lines are ignored.

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "stdpairs/covers.hpp"
#include "stdpairs/decomp.hpp"
#include "stdpairs/errors.hpp"
#include "stdpairs/ideal.hpp"
#include "stdpairs/monoid.hpp"
#include "stdpairs/pair.hpp"

namespace stdpairs {

inline constexpr const char* kArchiveTag = "STDPAIRS v1";

/// A cover read back together with its ambient monoid (an empty cover
/// carries no pair to recover it from).
struct LoadedCover {
  MonoidPtr monoid;
  Cover cover;
};

using Loaded = std::variant<MonoidPtr, MonomialIdeal, LoadedCover>;

namespace detail {

inline void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
}

inline void write_bucket_line(std::ostream& os, const IntVector& v) { os << to_string(v, " ") << '\n'; }

inline void write_monoid(std::ostream& os, const AffineMonoid& q) {
  os << "MONOID\n";
  write_matrix(os, q.gens());
}

inline void write_cover(std::ostream& os, const Cover& c) {
  os << "COVER " << c.buckets().size() << '\n';
  for (const auto& [f, bucket] : c.buckets()) {
    os << "FACE " << f.str() << ' ' << bucket.size() << '\n';
    for (const ProperPair& p : bucket) write_bucket_line(os, p.base());
  }
}

class Reader {
 public:
  explicit Reader(std::istream& in) {
    std::string s;
    std::size_t n = 0;
    while (std::getline(in, s)) {
      ++n;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      if (s.find_first_not_of(" \t") == std::string::npos) continue;
      lines_.push_back({n, s});
    }
    last_ = n;
  }

  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line() const { return done() ? last_ + 1 : lines_[pos_].number; }
  /// Number of the line consumed last.
  std::size_t previous() const { return prev_; }

  const std::string& peek(const std::string& section) const {
    if (done()) throw ParseError(line(), "unexpected end of file in " + section);
    return lines_[pos_].text;
  }
  std::string next(const std::string& section) {
    std::string s = peek(section);
    prev_ = lines_[pos_++].number;
    return s;
  }

  std::vector<Int> integers(const std::string& section) {
    const std::size_t at = line();
    std::istringstream is(next(section));
    std::vector<Int> out;
    std::string tok;
    while (is >> tok) {
      try {
        out.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError(at, "bad integer '" + tok + "' in " + section);
      }
    }
    return out;
  }

  std::size_t count(const std::string& text, const std::string& section) const {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (v < 0 || text.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(text);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(previous(), "bad count '" + text + "' in " + section);
    }
  }

  /// "KEYWORD rest" -> rest; throws unless the line starts with the keyword.
  std::string keyword(const std::string& kw, const std::string& section) {
    const std::size_t at = line();
    const std::string s = next(section);
    if (s == kw) return {};
    if (s.rfind(kw + " ", 0) != 0) throw ParseError(at, "expected " + kw + " in " + section + ", got '" + s + "'");
    return s.substr(kw.size() + 1);
  }

  IntMatrix matrix(const std::string& section) {
    const std::size_t at = line();
    const std::vector<Int> head = integers(section);
    if (head.size() != 2 || head[0] < 0 || head[1] < 0)
      throw ParseError(at, "expected '<rows> <cols>' in " + section);
    const auto rows = static_cast<std::size_t>(head[0]);
    const auto cols = static_cast<std::size_t>(head[1]);
    std::vector<IntVector> data;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t row_at = line();
      std::vector<Int> row = integers(section);
      if (row.size() != cols) throw ParseError(row_at, "row has wrong length in " + section);
      data.push_back(std::move(row));
    }
    return IntMatrix::from_rows(cols, data);
  }

  IntVector vector(std::size_t dim, const std::string& section) {
    const std::size_t at = line();
    IntVector v = integers(section);
    if (v.size() != dim) throw ParseError(at, "vector has wrong length in " + section);
    return v;
  }

  FaceIndex face(const std::string& text, const std::string& section) const {
    const std::size_t at = previous();
    std::string s = text;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError(at, "bad face '" + text + "' in " + section);
    s = s.substr(1, s.size() - 2);
    std::vector<std::size_t> idx;
    std::istringstream is(s);
    std::string tok;
    bool bottom = false;
    while (std::getline(is, tok, ',')) {
      const auto b = tok.find_first_not_of(' ');
      if (b == std::string::npos) continue;
      tok = tok.substr(b, tok.find_last_not_of(' ') - b + 1);
      if (tok == "-1") {
        bottom = true;
        continue;
      }
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (v < 0 || used != tok.size()) throw std::invalid_argument(tok);
        idx.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw ParseError(at, "bad face '" + text + "' in " + section);
      }
    }
    if (bottom) {
      if (!idx.empty()) throw ParseError(at, "bad face '" + text + "' in " + section);
      return FaceIndex::bottom();
    }
    try {
      return FaceIndex(std::move(idx));
    } catch (const ContractError& e) {
      throw ParseError(at, std::string(e.what()) + " in " + section);
    }
  }

  /// "(0, 3) 4" -> face and trailing count.
  std::pair<FaceIndex, std::size_t> face_and_count(const std::string& text, const std::string& section) const {
    const auto close = text.rfind(')');
    if (close == std::string::npos) throw ParseError(previous(), "bad face line in " + section);
    return {face(text.substr(0, close + 1), section), count(text.substr(close + 1), section)};
  }

 private:
  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
  std::size_t prev_ = 0;
};

inline IntVector base_in(Reader& r, const MonoidPtr& q, const std::string& sec) {
  IntVector b = r.vector(q->dim(), sec);
  if (!q->is_element(b)) throw ParseError(r.previous(), "base " + to_string(b, ",") + " is not in the monoid");
  return b;
}

inline Cover read_cover(Reader& r, const MonoidPtr& q, const std::string& count_text, const std::string& hash) {
  const std::string sec = "COVER";
  Cover c;
  const std::size_t faces = r.count(count_text, sec);
  for (std::size_t k = 0; k < faces; ++k) {
    auto [f, n] = r.face_and_count(r.keyword("FACE", sec), sec);
    if (f.is_bottom() || !q->has_face(f)) throw ParseError(r.previous(), "not a face of the monoid: " + f.str());
    for (std::size_t i = 0; i < n; ++i) c.add(ProperPair(base_in(r, q, sec), f, q, hash));
  }
  return c;
}

inline OverlapMap read_overlap(Reader& r, const MonoidPtr& q, const std::string& count_text, const std::string& hash) {
  const std::string sec = "OVERLAP";
  OverlapMap out;
  const std::size_t faces = r.count(count_text, sec);
  for (std::size_t k = 0; k < faces; ++k) {
    auto [f, classes] = r.face_and_count(r.keyword("FACE", sec), sec);
    if (f.is_bottom() || !q->has_face(f)) throw ParseError(r.previous(), "not a face of the monoid: " + f.str());
    std::vector<OverlapClass>& list = out[f];
    for (std::size_t c = 0; c < classes; ++c) {
      OverlapClass cls{f, {}};
      const std::size_t n = r.count(r.keyword("CLASS", sec), sec);
      for (std::size_t i = 0; i < n; ++i) cls.pairs.emplace_back(base_in(r, q, sec), f, q, hash);
      list.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace detail

/// Canonical archive text of a monoid.
inline std::string to_archive(const AffineMonoid& q) {
  std::ostringstream os;
  os << kArchiveTag << '\n';
  detail::write_monoid(os, q);
  os << "END\n";
  return os.str();
}

/// Canonical archive text of an ideal and every cached result it holds.
inline std::string to_archive(const MonomialIdeal& i) {
  std::ostringstream os;
  os << kArchiveTag << '\n';
  detail::write_monoid(os, i.ambient());
  os << "IDEAL\n";
  detail::write_matrix(os, i.gens());
  if (auto c = i.cached_cover()) detail::write_cover(os, *c);
  if (auto classes = i.cached_overlap_classes()) {
    os << "OVERLAP " << classes->size() << '\n';
    for (const auto& [f, list] : *classes) {
      os << "FACE " << f.str() << ' ' << list.size() << '\n';
      for (const OverlapClass& cls : list) {
        os << "CLASS " << cls.pairs.size() << '\n';
        for (const ProperPair& p : cls.pairs) detail::write_bucket_line(os, p.base());
      }
    }
    const OverlapMap maximal = maximal_overlap_classes(i);
    os << "ASSOCIATED " << maximal.size() << '\n';
    for (const auto& [f, list] : maximal) os << f.str() << '\n';
  }
  if (auto d = i.cached_decomposition()) {
    os << "DECOMPOSITION " << d->size() << '\n';
    for (const auto& gens : *d) detail::write_matrix(os, IntMatrix::from_columns(i.ambient().dim(), gens));
  }
  os << "END\n";
  return os.str();
}

/// Canonical archive text of a cover; pairs are stored as proper pairs of
/// the empty ideal.
inline std::string to_archive(const AffineMonoid& q, const Cover& c) {
  std::ostringstream os;
  os << kArchiveTag << '\n';
  detail::write_monoid(os, q);
  detail::write_cover(os, c);
  os << "END\n";
  return os.str();
}

/// Recomputes the cached results of i from its generators and throws
/// DomainError on the first disagreement.
inline void verify_caches(const MonomialIdeal& i, const CoverOptions& opts = {}) {
  const MonomialIdeal fresh(i.ambient_ptr(), i.generators());
  if (auto c = i.cached_cover())
    if (!c->same_pairs(standard_cover(fresh, opts))) throw DomainError("stored standard cover does not match");
  if (auto m = i.cached_overlap_classes())
    if (*m != overlap_classes(fresh, opts)) throw DomainError("stored overlap classes do not match");
  if (auto d = i.cached_decomposition()) {
    std::vector<MonomialIdeal> stored;
    for (const auto& gens : *d) stored.emplace_back(i.ambient_ptr(), gens);
    const std::vector<MonomialIdeal> again = irreducible_decomposition(fresh, opts);
    bool same = stored.size() == again.size();
    for (const MonomialIdeal& w : stored)
      same = same && std::find(again.begin(), again.end(), w) != again.end();
    if (!same) throw DomainError("stored irreducible decomposition does not match");
  }
}

/// Parses archive text. Cached results are attached as stored; with
/// `verify` they are recomputed and compared first.
inline Loaded from_archive(std::istream& in, bool verify = false, const CoverOptions& opts = {}) {
  detail::Reader r(in);
  const std::size_t tag_line = r.line();
  if (r.done() || r.next("header") != kArchiveTag) throw ParseError(tag_line, "missing 'STDPAIRS v1' header");

  r.keyword("MONOID", "MONOID");
  MonoidPtr q;
  try {
    q = new_monoid(r.matrix("MONOID"));
  } catch (const DomainError& e) {
    throw ParseError(r.previous(), std::string(e.what()) + " in MONOID");
  }

  std::optional<MonomialIdeal> ideal;
  std::optional<Cover> cover;
  std::optional<OverlapMap> classes;
  std::optional<ComponentList> decomposition;
  std::optional<std::vector<FaceIndex>> associated;
  std::string hash;

  while (true) {
    const std::size_t at = r.line();
    const std::string s = r.next("archive body");
    std::istringstream is(s);
    std::string kw, rest;
    is >> kw;
    std::getline(is, rest);
    if (const auto b = rest.find_first_not_of(' '); b != std::string::npos) rest = rest.substr(b);
    else rest.clear();

    if (kw == "END") break;
    if (kw == "IDEAL") {
      if (ideal || cover) throw ParseError(at, "IDEAL must directly follow MONOID");
      try {
        ideal.emplace(q, r.matrix("IDEAL"));
      } catch (const std::logic_error& e) {
        throw ParseError(at, std::string(e.what()) + " in IDEAL");
      }
      hash = ideal->hash_string();
    } else if (kw == "COVER") {
      if (cover) throw ParseError(at, "repeated COVER section");
      cover = detail::read_cover(r, q, rest, hash);
    } else if (kw == "OVERLAP") {
      if (!ideal) throw ParseError(at, "OVERLAP needs an IDEAL section");
      classes = detail::read_overlap(r, q, rest, hash);
    } else if (kw == "ASSOCIATED") {
      if (!ideal) throw ParseError(at, "ASSOCIATED needs an IDEAL section");
      const std::size_t n = r.count(rest, "ASSOCIATED");
      associated.emplace();
      for (std::size_t k = 0; k < n; ++k) {
        const std::string t = r.next("ASSOCIATED");
        associated->push_back(r.face(t, "ASSOCIATED"));
      }
    } else if (kw == "DECOMPOSITION") {
      if (!ideal) throw ParseError(at, "DECOMPOSITION needs an IDEAL section");
      const std::size_t n = r.count(rest, "DECOMPOSITION");
      decomposition.emplace();
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t m_at = r.line();
        const IntMatrix m = r.matrix("DECOMPOSITION");
        if (m.cols() > 0 && m.rows() != q->dim()) throw ParseError(m_at, "component has wrong dimension");
        decomposition->push_back(m.column_list());
      }
    } else {
      throw ParseError(at, "unknown section '" + kw + "'");
    }
  }
  if (!r.done()) throw ParseError(r.line(), "content after END");

  if (!ideal) {
    if (!cover) return q;
    return LoadedCover{q, std::move(*cover)};
  }
  if (cover) ideal->store_cover(std::move(*cover));
  if (classes) ideal->store_overlap_classes(std::move(*classes));
  if (decomposition) ideal->store_decomposition(std::move(*decomposition));
  if (verify) {
    verify_caches(*ideal, opts);
    if (associated) {
      std::vector<FaceIndex> again;
      for (const auto& [f, list] : maximal_overlap_classes(*ideal, opts)) again.push_back(f);
      if (again != *associated) throw DomainError("stored associated primes do not match");
    }
  }
  return *ideal;
}

inline Loaded from_archive(const std::string& text, bool verify = false, const CoverOptions& opts = {}) {
  std::istringstream is(text);
  return from_archive(is, verify, opts);
}

namespace detail {
inline bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + path + " failed");
  return true;
}
}  // namespace detail

inline bool save(const AffineMonoid& q, const std::string& path) { return detail::write_file(path, to_archive(q)); }
inline bool save(const MonomialIdeal& i, const std::string& path) { return detail::write_file(path, to_archive(i)); }
inline bool save(const AffineMonoid& q, const Cover& c, const std::string& path) {
  return detail::write_file(path, to_archive(q, c));
}

inline Loaded load(const std::string& path, bool verify = false, const CoverOptions& opts = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return from_archive(in, verify, opts);
}

namespace detail {
inline std::string dedup_key(const AffineMonoid& q) { return q.hash_string(); }
inline std::string dedup_key(const MonoidPtr& q) { return q->hash_string(); }
inline std::string dedup_key(const MonomialIdeal& i) { return i.hash_string(); }
inline std::string dedup_key(const ProperPair& p) { return p.hash_string(); }
inline std::string dedup_key(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols() << ':' << m;
  return os.str();
}
}  // namespace detail

/// First occurrence of each mathematically distinct item, in input order.
template <class T>
std::vector<T> dedup(const std::vector<T>& items) {
  std::unordered_set<std::string> seen;
  std::vector<T> out;
  for (const T& x : items)
    if (seen.insert(detail::dedup_key(x)).second) out.push_back(x);
  return out;
}

}  // namespace stdpairs
