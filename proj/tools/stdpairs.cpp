// stdpairs: command-line front end.
//
//   stdpairs monoid <file> | --matrix "r c; ..."   info | faces | supports
//   stdpairs ideal <file> | --monoid M --gens G    cover | radical | assoc | mult --face F | decompose
//   stdpairs pair divides <file> <file>
//   stdpairs export-m2 <file>
//
// Exit status: 0 ok, 2 parse or domain error, 3 loop cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stdpairs/stdpairs.hpp"

namespace {

using namespace stdpairs;

// Malformed command-line arguments.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string out;
  std::size_t loop_cap = 1000;
  bool verify = false;
  bool quiet = false;
  std::string matrix;
  std::string monoid;
  std::string gens;
  std::string face;
  std::string archive;
  std::vector<std::string> args;
};

// "r c; e11 e12 ...; e21 ..." with rows separated by ';'. Commas count as
// blanks.
IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    for (char& ch : part)
      if (ch == ',') ch = ' ';
    parts.push_back(part);
  }
  auto ints = [](const std::string& s) {
    std::istringstream is(s);
    std::vector<Int> v;
    std::string tok;
    while (is >> tok) {
      try {
        v.emplace_back(tok);
      } catch (const std::exception&) {
        throw UsageError("bad integer '" + tok + "' in matrix");
      }
    }
    return v;
  };
  if (parts.empty()) throw UsageError("empty matrix text");
  const std::vector<Int> head = ints(parts[0]);
  if (head.size() != 2 || head[0] < 0 || head[1] < 0) throw UsageError("matrix text must start with 'rows cols'");
  const auto rows = static_cast<std::size_t>(head[0]);
  const auto cols = static_cast<std::size_t>(head[1]);
  std::vector<IntVector> data;
  for (std::size_t r = 1; r < parts.size(); ++r) {
    IntVector row = ints(parts[r]);
    if (row.empty() && r + 1 == parts.size()) continue;
    if (row.size() != cols) throw UsageError("matrix row " + std::to_string(r) + " has wrong length");
    data.push_back(std::move(row));
  }
  if (data.size() != rows) throw UsageError("matrix has " + std::to_string(data.size()) + " rows, expected " +
                                                   std::to_string(rows));
  return IntMatrix::from_rows(cols, data);
}

// "(0, 3)", "0,3", "()", "-1".
FaceIndex parse_face(std::string text) {
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')') body += ch;
  std::vector<std::size_t> idx;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::istringstream is(tok);
    long long v = 0;
    std::string rest;
    if (!(is >> v)) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      throw UsageError("bad face '" + text + "'");
    }
    if (is >> rest) throw UsageError("bad face '" + text + "'");
    if (v == -1) return FaceIndex::bottom();
    if (v < 0) throw UsageError("bad face '" + text + "'");
    idx.push_back(static_cast<std::size_t>(v));
  }
  return FaceIndex(std::move(idx));
}

CoverOptions cover_options(const Settings& s) {
  CoverOptions o;
  o.loop_cap = s.loop_cap;
  if (!s.quiet) o.progress = [](const std::string& line) { std::cerr << line << '\n'; };
  return o;
}

void emit(const Settings& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw IoError("cannot write " + s.out);
}

std::string matrix_text(const IntMatrix& m) {
  std::ostringstream os;
  detail::write_matrix(os, m);
  return os.str();
}

int run_monoid(const Settings& s) {
  std::vector<std::string> args = s.args;
  MonoidPtr q;
  if (!s.matrix.empty()) {
    q = new_monoid(parse_matrix(s.matrix));
  } else {
    if (args.empty()) throw UsageError("monoid needs a file or --matrix");
    Loaded l = load(args.front(), s.verify, cover_options(s));
    args.erase(args.begin());
    if (auto* p = std::get_if<MonoidPtr>(&l)) q = *p;
    else if (auto* i = std::get_if<MonomialIdeal>(&l)) q = i->ambient_ptr();
    else q = std::get<LoadedCover>(l).monoid;
  }
  if (args.size() != 1) throw UsageError("monoid expects one action: info, faces or supports");
  const std::string& action = args.front();

  std::ostringstream os;
  if (action == "info") {
    os << "dim " << q->dim() << '\n' << "ngens " << q->ngens() << '\n';
    os << "gens\n" << matrix_text(q->gens());
    os << "mingens\n" << matrix_text(q->mingens());
    os << "faces " << q->face_lattice().size() << '\n';
    os << "hash " << q->hash_string() << '\n';
  } else if (action == "faces") {
    for (const FaceIndex& f : q->face_lattice()) os << f.str() << '\n';
  } else if (action == "supports") {
    for (const auto& [f, m] : q->integral_support_vectors()) {
      os << f.str() << ":";
      for (const IntVector& r : m.row_list()) os << ' ' << r;
      os << '\n';
    }
  } else {
    throw UsageError("unknown monoid action '" + action + "'");
  }
  emit(s, os.str());
  return 0;
}

int run_ideal(const Settings& s) {
  std::vector<std::string> args = s.args;
  std::optional<MonomialIdeal> ideal;
  if (!s.monoid.empty() || !s.gens.empty()) {
    if (s.monoid.empty() || s.gens.empty()) throw UsageError("--monoid and --gens go together");
    ideal.emplace(new_monoid(parse_matrix(s.monoid)), parse_matrix(s.gens));
  } else {
    if (args.empty()) throw UsageError("ideal needs a file or --monoid/--gens");
    Loaded l = load(args.front(), s.verify, cover_options(s));
    args.erase(args.begin());
    auto* i = std::get_if<MonomialIdeal>(&l);
    if (!i) throw DomainError(s.args.front() + " holds no ideal");
    ideal = *i;
  }
  if (args.size() != 1) throw UsageError("ideal expects one action: cover, radical, assoc, mult or decompose");
  const std::string& action = args.front();
  const CoverOptions opts = cover_options(s);

  std::ostringstream os;
  if (action == "cover") {
    const Cover cover = standard_cover(*ideal, opts);
    for (const auto& [f, bucket] : cover.buckets()) {
      os << f.str() << ":";
      for (const ProperPair& p : bucket) os << ' ' << p.base();
      os << '\n';
    }
  } else if (action == "radical") {
    os << radical(*ideal, opts).str() << '\n';
  } else if (action == "assoc") {
    for (const auto& [f, p] : associated_primes(*ideal, opts)) os << f.str() << ' ' << p.str() << '\n';
  } else if (action == "mult") {
    if (s.face.empty()) throw UsageError("mult needs --face");
    os << multiplicity(*ideal, parse_face(s.face), opts) << '\n';
  } else if (action == "decompose") {
    for (const MonomialIdeal& w : irreducible_decomposition(*ideal, opts)) os << w.str() << '\n';
  } else {
    throw UsageError("unknown ideal action '" + action + "'");
  }
  if (!s.archive.empty()) save(*ideal, s.archive);
  emit(s, os.str());
  return 0;
}

ProperPair load_pair(const std::string& path, const Settings& s) {
  Loaded l = load(path, s.verify);
  const Cover* c = nullptr;
  if (auto* lc = std::get_if<LoadedCover>(&l)) c = &lc->cover;
  if (!c || c->size() != 1) throw DomainError(path + " must hold a cover with exactly one pair");
  return c->pairs().front();
}

int run_pair(const Settings& s) {
  if (s.args.size() != 3 || s.args[0] != "divides") throw UsageError("usage: pair divides <file> <file>");
  const ProperPair p = load_pair(s.args[1], s);
  const ProperPair p2 = load_pair(s.args[2], s);
  std::ostringstream os;
  const std::vector<IntVector> rows = divides(p, p2);
  if (rows.empty()) os << "none\n";
  for (const IntVector& r : rows) os << to_string(r, " ") << '\n';
  emit(s, os.str());
  return 0;
}

int run_export(const Settings& s) {
  if (s.args.size() != 1) throw UsageError("usage: export-m2 <file>");
  Loaded l = load(s.args.front(), s.verify, cover_options(s));
  auto* i = std::get_if<MonomialIdeal>(&l);
  if (!i) throw DomainError(s.args.front() + " holds no ideal");
  const Cover c = i->is_empty() ? Cover{} : standard_cover(*i, cover_options(s));
  emit(s, export_macaulay2(*i, c));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Standard pairs of monomial ideals in affine semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", s.out, "Write the result to this file");
  app.add_option("--loop-cap", s.loop_cap, "Iteration cap of the cover refinement")->check(CLI::PositiveNumber);
  app.add_flag("--verify", s.verify, "Recompute cached results found in archives");
  app.add_flag("--quiet", s.quiet, "No progress lines on stderr");

  auto* monoid = app.add_subcommand("monoid", "Faces and support functions of a monoid");
  monoid->add_option("--matrix", s.matrix, "Generators as \"r c; row; row\"");
  monoid->add_option("args", s.args, "[file] info|faces|supports");

  auto* ideal = app.add_subcommand("ideal", "Standard cover and decomposition of an ideal");
  ideal->add_option("--monoid", s.monoid, "Monoid generators as \"r c; row; row\"");
  ideal->add_option("--gens", s.gens, "Ideal generators as columns, \"r c; row; row\"");
  ideal->add_option("--face", s.face, "Face for mult, e.g. \"(0, 3)\"");
  ideal->add_option("--archive", s.archive, "Save the ideal with its computed results");
  ideal->add_option("args", s.args, "[file] cover|radical|assoc|mult|decompose");

  auto* pair = app.add_subcommand("pair", "Pair operations");
  pair->add_option("args", s.args, "divides <file> <file>");

  auto* m2 = app.add_subcommand("export-m2", "Macaulay2 script for an ideal and its standard cover");
  m2->add_option("args", s.args, "<file>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*monoid) return run_monoid(s);
    if (*ideal) return run_ideal(s);
    if (*pair) return run_pair(s);
    return run_export(s);
  } catch (const LoopCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::logic_error& e) {  // contract, domain and properness errors
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {  // parse and I/O errors
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
