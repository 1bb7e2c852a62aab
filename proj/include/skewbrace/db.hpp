#pragma once

// Compact brace records: generators of the additive and multiplicative
// groups as permutation groups plus the two permutations that undo the
// lexicographic sort of their element lists. Text container "SBDB 1".

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/descriptor.hpp"

namespace skewbrace {

struct DbRecord {
  std::size_t n = 0;
  std::vector<Permutation> gens_add;
  std::vector<Permutation> gens_mul;
  Permutation sigma;
  Permutation tau;

  friend bool operator==(const DbRecord&, const DbRecord&) = default;
};

namespace detail {

/// Greedy generators: scan the elements in lexicographic order of their
/// permutations and keep each one that enlarges the generated subgroup.
inline std::vector<Permutation> greedy_lex_generators(const CayleyGroup& g,
                                                      const std::vector<Permutation>& tuple,
                                                      const Permutation& sort_order) {
  std::vector<Permutation> gens;
  SubsetMask generated = SubsetMask::zero(g.order());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    Element x = sort_order(static_cast<Element>(k));
    if (generated.contains(x)) continue;
    gens.push_back(tuple[x]);
    generated.insert(x);
    generated = subgroup_generated(g, generated);
  }
  return gens;
}

}  // namespace detail

/// Element j is stored as the right translation a_j of (A,+) and g_j of
/// (A,∘), so compose(a_i, a_j) = a_{i+j} and compose(g_i, g_j) = g_{i∘j}.
inline DbRecord pack(const SkewBrace& a) {
  DbRecord rec;
  rec.n = a.order();
  auto a_tuple = right_regular_representation(a.additive());
  auto g_tuple = right_regular_representation(a.multiplicative());
  auto a_sorted = sort_elements(a_tuple);
  auto g_sorted = sort_elements(g_tuple);
  rec.gens_add = detail::greedy_lex_generators(a.additive(), a_tuple, a_sorted.sigma);
  rec.gens_mul = detail::greedy_lex_generators(a.multiplicative(), g_tuple, g_sorted.sigma);
  rec.sigma = a_sorted.sigma;
  rec.tau = g_sorted.sigma;
  return rec;
}

namespace detail {

inline std::vector<Permutation> recover_tuple(const std::vector<Permutation>& gens, std::size_t n,
                                              const Permutation& recovery, const char* which) {
  for (const auto& g : gens) {
    if (g.degree() != n) {
      throw Error(errc::malformed_record, std::string(which) + " generator of degree " +
                                              std::to_string(g.degree()) + ", expected " + std::to_string(n));
    }
  }
  auto elems = enumerate_permutation_group(gens, n);
  if (elems.size() != n) {
    throw Error(errc::order_mismatch, std::string(which) + " generators produce a group of order " +
                                          std::to_string(elems.size()) + ", expected " + std::to_string(n));
  }
  if (recovery.degree() != n) {
    throw Error(errc::malformed_record, std::string(which) + " recovery permutation has wrong degree");
  }
  auto sorted = sort_elements(elems);
  auto tuple = unsort_elements(sorted.sorted, recovery);
  if (!tuple.front().is_identity()) {
    throw Error(errc::malformed_record, std::string(which) + " recovery does not put the identity first");
  }
  return tuple;
}

inline std::vector<Element> table_from_tuple(const std::vector<Permutation>& tuple) {
  std::size_t n = tuple.size();
  std::map<std::vector<Permutation::point_type>, Element> index;
  for (std::size_t k = 0; k < n; ++k) {
    auto im = tuple[k].images();
    index.emplace(std::vector<Permutation::point_type>(im.begin(), im.end()), static_cast<Element>(k));
  }
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto p = compose(tuple[i], tuple[j]);
      auto im = p.images();
      flat[i * n + j] = index.at(std::vector<Permutation::point_type>(im.begin(), im.end()));
    }
  }
  return flat;
}

}  // namespace detail

/// Rebuilds the brace: enumerate both generated groups, sort, undo the sorts
/// with sigma and tau, then a_i + a_j = a_k where a_i a_j = a_k and
/// a_i ∘ a_j = a_k where g_i g_j = g_k.
inline SkewBrace unpack(const DbRecord& rec) {
  auto a_tuple = detail::recover_tuple(rec.gens_add, rec.n, rec.sigma, "additive");
  auto g_tuple = detail::recover_tuple(rec.gens_mul, rec.n, rec.tau, "multiplicative");
  try {
    return SkewBrace::validate(CayleyGroup::from_flat(rec.n, detail::table_from_tuple(a_tuple)),
                               CayleyGroup::from_flat(rec.n, detail::table_from_tuple(g_tuple)));
  } catch (const Error& e) {
    throw Error(errc::malformed_record, std::string("record does not describe a skew brace (") + e.what() + ")",
                e.witness());
  }
}

/// The record body as written inside the container (without the header line).
inline std::string record_text(const DbRecord& rec) {
  std::string s = "gens_add " + std::to_string(rec.gens_add.size()) + "\n";
  for (const auto& g : rec.gens_add) s += g.to_string() + "\n";
  s += "sigma " + rec.sigma.to_string() + "\n";
  s += "gens_mul " + std::to_string(rec.gens_mul.size()) + "\n";
  for (const auto& g : rec.gens_mul) s += g.to_string() + "\n";
  s += "tau " + rec.tau.to_string() + "\n";
  return s;
}

/// Size of the uncompressed form that lists all 2n permutations.
inline std::size_t naive_listing_size(const SkewBrace& a) {
  std::size_t bytes = 0;
  for (const auto& p : right_regular_representation(a.additive())) bytes += p.to_string().size() + 1;
  for (const auto& p : right_regular_representation(a.multiplicative())) bytes += p.to_string().size() + 1;
  return bytes;
}

struct DatabaseEntry {
  std::size_t order = 0;
  std::size_t index = 0;
  DbRecord record;
};

struct Database {
  int version = 1;
  std::vector<DatabaseEntry> entries;

  std::vector<const DatabaseEntry*> of_order(std::size_t n) const {
    std::vector<const DatabaseEntry*> out;
    for (const auto& e : entries) {
      if (e.order == n) out.push_back(&e);
    }
    return out;
  }

  const DatabaseEntry& at(std::size_t n, std::size_t index) const {
    for (const auto& e : entries) {
      if (e.order == n && e.index == index) return e;
    }
    throw Error(errc::out_of_range, "no brace " + std::to_string(n) + "," + std::to_string(index));
  }
};

/// Appends the braces of one order with indices 1..k in the given order.
inline void append_order(Database& db, std::size_t n, const std::vector<SkewBrace>& braces) {
  std::size_t k = 0;
  for (const auto& b : braces) {
    if (b.order() != n) throw Error(errc::order_mismatch, "brace of order " + std::to_string(b.order()));
    db.entries.push_back({n, ++k, pack(b)});
  }
}

inline void write_db(const Database& db, std::ostream& out) {
  out << "SBDB " << db.version << "\n";
  for (const auto& e : db.entries) {
    out << "brace " << e.order << " " << e.index << "\n" << record_text(e.record) << "end\n";
  }
  if (!out) throw Error(errc::io, "write failed");
}

inline std::string write_db(const Database& db) {
  std::ostringstream out;
  write_db(db, out);
  return out.str();
}

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank, non-comment line, or nullopt at end of input.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return line.substr(first);
    }
    return std::nullopt;
  }

  std::string expect(const char* what) {
    auto line = next();
    if (!line) fail(std::string("unexpected end of input, expected ") + what);
    return *line;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(errc::syntax, "line " + std::to_string(line_no_) + ": " + what);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

inline std::size_t parse_count(LineReader& r, const std::string& word) {
  if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos || word.size() > 9) {
    r.fail("expected a non-negative integer, got '" + word + "'");
  }
  return static_cast<std::size_t>(std::stoul(word));
}

inline Permutation parse_perm(LineReader& r, const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    r.fail(e.what());
  }
}

}  // namespace detail

/// Parses an SBDB container. With `verify`, every record is unpacked and
/// validated while reading.
inline Database read_db(std::istream& in, bool verify = false) {
  detail::LineReader r(in);
  Database db;
  auto header = r.next();
  if (!header) r.fail("empty input, expected 'SBDB 1'");
  auto hw = detail::split_words(*header);
  if (hw.size() != 2 || hw[0] != "SBDB") r.fail("expected header 'SBDB <version>'");
  if (hw[1] != "1") throw Error(errc::version_mismatch, "unsupported version " + hw[1]);
  std::map<std::size_t, std::size_t> last_index;
  while (auto line = r.next()) {
    auto w = detail::split_words(*line);
    if (w.size() != 3 || w[0] != "brace") r.fail("expected 'brace <order> <index>'");
    DatabaseEntry e;
    e.order = detail::parse_count(r, w[1]);
    e.index = detail::parse_count(r, w[2]);
    if (e.order == 0) r.fail("order must be positive");
    if (e.index != last_index[e.order] + 1) r.fail("indices must be contiguous per order");
    last_index[e.order] = e.index;
    e.record.n = e.order;
    auto read_gens = [&](const char* keyword, std::vector<Permutation>& gens) {
      auto gw = detail::split_words(r.expect(keyword));
      if (gw.size() != 2 || gw[0] != keyword) r.fail(std::string("expected '") + keyword + " <k>'");
      std::size_t k = detail::parse_count(r, gw[1]);
      for (std::size_t i = 0; i < k; ++i) {
        auto p = detail::parse_perm(r, r.expect("permutation"));
        if (p.degree() != e.order) r.fail("permutation degree differs from the brace order");
        gens.push_back(std::move(p));
      }
    };
    auto read_recovery = [&](const char* keyword) {
      auto l = r.expect(keyword);
      auto space = l.find(' ');
      if (space == std::string::npos || l.substr(0, space) != keyword) {
        r.fail(std::string("expected '") + keyword + " <permutation>'");
      }
      auto p = detail::parse_perm(r, l.substr(space + 1));
      if (p.degree() != e.order) r.fail("permutation degree differs from the brace order");
      return p;
    };
    read_gens("gens_add", e.record.gens_add);
    e.record.sigma = read_recovery("sigma");
    read_gens("gens_mul", e.record.gens_mul);
    e.record.tau = read_recovery("tau");
    if (r.expect("end") != "end") r.fail("expected 'end'");
    if (verify) {
      try {
        (void)unpack(e.record);
      } catch (const Error& err) {
        throw Error(err.code(), "brace " + std::to_string(e.order) + "," + std::to_string(e.index) + ": " +
                                    err.what());
      }
    }
    db.entries.push_back(std::move(e));
  }
  return db;
}

inline Database read_db(const std::string& text, bool verify = false) {
  std::istringstream in(text);
  return read_db(in, verify);
}

/// Whether the additive group of the record is abelian (its generators commute).
inline bool record_is_classical(const DbRecord& rec) {
  for (const auto& g : rec.gens_add) {
    for (const auto& h : rec.gens_add) {
      if (!(compose(g, h) == compose(h, g))) return false;
    }
  }
  return true;
}

struct CensusRow {
  std::size_t n = 0;
  std::size_t skew = 0;
  std::size_t classical = 0;
};

inline std::vector<CensusRow> census(const Database& db) {
  std::map<std::size_t, CensusRow> rows;
  for (const auto& e : db.entries) {
    auto& row = rows[e.order];
    row.n = e.order;
    ++row.skew;
    if (record_is_classical(e.record)) ++row.classical;
  }
  std::vector<CensusRow> out;
  for (auto& [n, row] : rows) out.push_back(row);
  return out;
}

}  // namespace skewbrace
