// skewbrace: enumerate, store and analyze finite skew braces.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "skewbrace/skewbrace.hpp"

namespace sb = skewbrace;

namespace {

constexpr const char* kDbEnv = "SKEWBRACE_DB";

struct Item {
  std::size_t n = 0;
  std::size_t index = 0;
  sb::SkewBrace brace;
};

struct SourceOptions {
  std::string db;
  std::size_t order = 0;
  std::size_t to = 0;
  bool deep = false;
  bool classical = false;
};

std::string db_path(const SourceOptions& s) {
  if (!s.db.empty()) return s.db;
  if (const char* env = std::getenv(kDbEnv)) return env;
  return {};
}

sb::Database load_db(const std::string& path, bool verify) {
  std::ifstream in(path);
  if (!in) throw sb::Error(sb::errc::io, "cannot open " + path);
  return sb::read_db(in, verify);
}

std::pair<std::size_t, std::size_t> order_range(const SourceOptions& s) {
  std::size_t lo = s.order, hi = s.to ? s.to : s.order;
  if (hi < lo) throw sb::Error(sb::errc::out_of_range, "--to is below --order");
  return {lo, hi};
}

/// Braces from a database (all of it, or the requested orders) or, without
/// one, from enumerating the requested orders. Indices follow the
/// canonical order in both cases.
std::vector<Item> load_items(const SourceOptions& s) {
  std::vector<Item> items;
  auto [lo, hi] = order_range(s);
  auto path = db_path(s);
  if (!path.empty()) {
    auto db = load_db(path, false);
    for (const auto& e : db.entries) {
      if (lo && (e.order < lo || e.order > hi)) continue;
      if (s.classical && !sb::record_is_classical(e.record)) continue;
      items.push_back({e.order, e.index, sb::unpack(e.record)});
    }
    if (lo && items.empty()) throw sb::Error(sb::errc::out_of_range, "no records of the requested orders");
    return items;
  }
  if (!lo) throw sb::Error(sb::errc::out_of_range, "give --order or a database (--db or " + std::string(kDbEnv) + ")");
  sb::EnumerateOptions opts;
  opts.deep = s.deep;
  for (std::size_t n = lo; n <= hi; ++n) {
    std::size_t k = 0;
    for (auto& b : sb::enumerate_order(n, s.classical, opts)) items.push_back({n, ++k, std::move(b)});
  }
  return items;
}

/// f applied to every item on `jobs` threads; results keep item order.
template <class F>
auto parallel_map(const std::vector<Item>& items, unsigned jobs, F f) {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::string mask_text(const sb::SubsetMask& m) { return m.to_string(); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string chain_text(const sb::SeriesChain& c) {
  std::string s;
  for (std::size_t i = 0; i < c.terms.size(); ++i) s += (i ? " > " : "") + std::to_string(c.terms[i].size());
  return s;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sb::Error(sb::errc::io, "cannot write " + path);
  out << text;
  if (!out.flush()) throw sb::Error(sb::errc::io, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sb::Error(sb::errc::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_enumerate(const SourceOptions& s, const std::string& out_path) {
  auto [lo, hi] = order_range(s);
  if (lo == 0) throw sb::Error(sb::errc::out_of_range, "order must be positive");
  sb::EnumerateOptions opts;
  opts.deep = s.deep;
  sb::Database db;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto braces = sb::enumerate_order(n, s.classical, opts);
    std::size_t classical = 0;
    for (const auto& b : braces) classical += sb::is_classical(b);
    std::cout << n << " " << braces.size() << " " << classical << "\n";
    sb::append_order(db, n, braces);
  }
  if (!out_path.empty()) write_text_file(out_path, sb::write_db(db));
  return 0;
}

std::string analyze_report(const Item& item) {
  const auto& a = item.brace;
  std::ostringstream out;
  auto d = sb::describe_brace(a);
  out << "brace " << item.n << " " << item.index << "\n";
  out << "descriptor " << d.summary() << "\n";
  auto ideals = sb::ideal_lattice(a);
  out << "ideals " << ideals.size() << ":";
  for (const auto& i : ideals) out << " " << mask_text(i);
  out << "\n";
  auto left = sb::all_left_ideals(a);
  out << "left_ideals " << left.size() << ":";
  for (const auto& r : left) out << " " << mask_text(r.mask) << (r.kind == sb::IdealKind::ideal ? "" : "*");
  out << "\n";
  out << "socle " << mask_text(sb::socle(a)) << "\n";
  out << "left_series " << chain_text(sb::left_series(a)) << "\n";
  out << "right_series " << chain_text(sb::right_series(a)) << "\n";
  out << "derived_series " << chain_text(sb::derived_series(a)) << "\n";
  auto rep = sb::radical_report(a);
  out << "baer " << rep.baer.size() << " " << mask_text(rep.baer) << "\n";
  out << "wedderburn " << rep.wedderburn.size() << " " << mask_text(rep.wedderburn) << "\n";
  out << "prime_ideals " << rep.prime_ideals.size() << ":";
  for (const auto& p : rep.prime_ideals) out << " " << mask_text(p);
  out << "\n";
  out << "prime " << yes(rep.is_prime) << " semiprime " << yes(rep.is_semiprime) << " simple " << yes(rep.is_simple)
      << " solvable " << yes(rep.is_solvable) << " left_nilpotent " << yes(rep.is_left_nilpotent)
      << " right_nilpotent " << yes(rep.is_right_nilpotent) << "\n";
  auto r = sb::yb_map(a);
  auto v = sb::verify_yang_baxter(r);
  out << "ybe " << (v.ok ? "ok" : "FAIL " + v.failure) << " involutive " << yes(sb::is_involutive(r)) << "\n";
  return out.str();
}

struct AnalyzeOptions {
  std::string file;
  std::size_t index = 0;
  std::string add, mul;
};

int cmd_analyze(const SourceOptions& s, const AnalyzeOptions& a) {
  std::vector<Item> items;
  if (!a.file.empty()) {
    auto text = read_text_file(a.file);
    std::istringstream probe(text), in(text);
    bool group = sb::detail::read_table_text(probe).kind == "group";
    auto brace = group ? sb::trivial_brace(sb::read_group_text(in)) : sb::read_brace_text(in);
    items.push_back({brace.order(), 0, std::move(brace)});
  } else {
    for (auto& it : load_items(s)) {
      if (a.index && it.index != a.index) continue;
      if (!a.add.empty() && sb::describe_group(it.brace.additive()).name != a.add) continue;
      if (!a.mul.empty() && sb::describe_group(it.brace.multiplicative()).name != a.mul) continue;
      items.push_back(std::move(it));
    }
    if (items.empty()) throw sb::Error(sb::errc::out_of_range, "no brace matches the selection");
  }
  for (std::size_t i = 0; i < items.size(); ++i) std::cout << (i ? "\n" : "") << analyze_report(items[i]);
  return 0;
}

struct CheckRow {
  std::string line;
  bool violation = false;
};

std::string format_row(const std::string& format, const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string s;
  if (format == "records") {
    for (const auto& [k, v] : fields) s += k + "=" + v + "\n";
    return s + "\n";
  }
  const char* sep = format == "tsv" ? "\t" : " ";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) s += sep;
    s += format == "tsv" || i < 2 ? fields[i].second : fields[i].first + "=" + fields[i].second;
  }
  return s + "\n";
}

int cmd_check(const SourceOptions& s, unsigned jobs, const std::string& format) {
  auto items = load_items(s);
  auto rows = parallel_map(items, jobs, [&](const Item& it) {
    CheckRow row;
    std::vector<std::pair<std::string, std::string>> f{{"n", std::to_string(it.n)},
                                                       {"index", std::to_string(it.index)}};
    auto d = sb::describe_brace(it.brace);
    f.push_back({"add", d.additive.name});
    f.push_back({"mul", d.multiplicative.name});
    f.push_back({"socle", std::to_string(d.socle_size)});
    f.push_back({"ideals", std::to_string(d.ideal_count)});
    std::string flags, problem;
    try {
      auto rep = sb::radical_report(it.brace);
      auto add_flag = [&](bool on, const char* name) {
        if (on) flags += (flags.empty() ? "" : ",") + std::string(name);
      };
      add_flag(d.classical, "classical");
      add_flag(d.trivial, "trivial");
      add_flag(d.two_sided, "two-sided");
      add_flag(rep.is_prime, "prime");
      add_flag(rep.is_semiprime, "semiprime");
      add_flag(rep.is_simple, "simple");
      add_flag(rep.is_solvable, "solvable");
      add_flag(rep.is_left_nilpotent, "left-nilpotent");
      add_flag(rep.is_right_nilpotent, "right-nilpotent");
      f.push_back({"flags", flags.empty() ? "-" : flags});
      f.push_back({"baer", std::to_string(rep.baer.size())});
      f.push_back({"wedderburn", std::to_string(rep.wedderburn.size())});
      f.push_back({"primes", std::to_string(rep.prime_ideals.size())});
      auto v = sb::verify_yang_baxter(sb::yb_map(it.brace));
      if (!v.ok) problem = "ybe: " + v.failure;
      if (d.classical && !sb::is_involutive(sb::yb_map(it.brace))) problem = "ybe: not involutive";
    } catch (const sb::Error& e) {
      problem = e.what();
    }
    row.violation = !problem.empty();
    f.push_back({"status", row.violation ? "VIOLATION " + problem : "ok"});
    row.line = format_row(format, f);
    return row;
  });
  std::size_t bad = 0;
  for (const auto& r : rows) {
    std::cout << r.line;
    bad += r.violation;
  }
  std::cerr << "checked " << rows.size() << " braces, " << bad << " violations\n";
  return bad ? 1 : 0;
}

int cmd_experiments(const SourceOptions& s, unsigned jobs) {
  auto items = load_items(s);
  struct Facts {
    bool classical, star_assoc, two_sided, simple, trivial;
    bool left_term_not_normal, derived_term_not_ideal;
    std::string summary;
  };
  auto facts = parallel_map(items, jobs, [](const Item& it) {
    const auto& a = it.brace;
    Facts f{};
    f.classical = sb::is_classical(a);
    f.star_assoc = sb::is_star_associative(a);
    f.two_sided = sb::is_two_sided(a);
    f.simple = sb::is_simple(a);
    f.trivial = sb::is_trivial(a);
    for (const auto& t : sb::left_series(a).terms)
      f.left_term_not_normal |= !sb::is_normal_subgroup(a.additive(), t);
    for (const auto& t : sb::derived_series(a).terms) f.derived_term_not_ideal |= !sb::is_ideal(a, t);
    f.summary = sb::describe_brace(a).summary();
    return f;
  });

  std::size_t classical_assoc = 0, counterexamples = 0, skew_witnesses = 0;
  std::cout << "two-sided sweep\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& f = facts[i];
    if (f.classical && f.star_assoc) {
      ++classical_assoc;
      if (!f.two_sided) {
        ++counterexamples;
        std::cout << "  counterexample " << items[i].n << " " << items[i].index << " " << f.summary << "\n";
      }
    }
    if (f.star_assoc && !f.two_sided) {
      ++skew_witnesses;
      std::cout << "  witness " << items[i].n << " " << items[i].index << " " << f.summary << "\n";
    }
  }
  std::cout << "  classical star-associative " << classical_assoc << " not two-sided " << counterexamples << "\n";
  std::cout << "  star-associative not two-sided " << skew_witnesses << "\n";

  std::cout << "simple census (composite orders)\n";
  std::map<std::size_t, std::size_t> simple_per_order;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t n = items[i].n;
    bool composite = false;
    for (std::size_t p = 2; p * p <= n; ++p) composite |= n % p == 0;
    if (!composite) continue;
    simple_per_order[n] += facts[i].simple;
    if (facts[i].simple) std::cout << "  witness " << n << " " << items[i].index << " " << facts[i].summary << "\n";
  }
  for (auto [n, k] : simple_per_order) std::cout << "  n=" << n << " simple " << k << "\n";

  std::size_t not_normal = 0, not_ideal = 0;
  for (const auto& f : facts) {
    not_normal += f.left_term_not_normal;
    not_ideal += f.derived_term_not_ideal;
  }
  std::cout << "series scans\n";
  std::cout << "  left series term not normal in (A,+) " << not_normal << "\n";
  std::cout << "  derived series term not an ideal of A " << not_ideal << "\n";
  return 0;
}

int cmd_ybe(const SourceOptions& s, unsigned jobs) {
  auto items = load_items(s);
  struct Verdict {
    bool ok, involutive, classical;
    std::string failure;
  };
  auto verdicts = parallel_map(items, jobs, [](const Item& it) {
    auto r = sb::yb_map(it.brace);
    auto v = sb::verify_yang_baxter(r);
    return Verdict{v.ok, sb::is_involutive(r), sb::is_classical(it.brace), v.failure};
  });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& v = verdicts[i];
    bool fail = !v.ok || (v.classical && !v.involutive);
    bad += fail;
    std::cout << items[i].n << " " << items[i].index << " " << (v.ok ? "ok" : "FAIL " + v.failure)
              << " involutive=" << yes(v.involutive) << (fail && v.ok ? " FAIL classical not involutive" : "")
              << "\n";
  }
  std::cerr << "verified " << items.size() << " braces, " << bad << " failures\n";
  return bad ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_db_pack(const std::string& file, const std::string& out_path) {
  std::ifstream in(file);
  if (!in) throw sb::Error(sb::errc::io, "cannot open " + file);
  auto a = sb::read_brace_text(in);
  sb::Database db;
  sb::append_order(db, a.order(), {a});
  auto text = sb::write_db(db);
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int cmd_db_unpack(const std::string& path, std::size_t n, std::size_t index) {
  auto db = load_db(path, false);
  std::cout << sb::brace_text(sb::unpack(db.at(n, index).record));
  return 0;
}

int cmd_db_verify(const std::string& path) {
  auto text = read_text_file(path);
  auto db = sb::read_db(text, true);
  auto again = sb::write_db(db);
  if (sb::write_db(sb::read_db(again)) != again) {
    throw sb::Error(sb::errc::internal_consistency, "serialization is not a fixpoint");
  }
  std::cout << "ok " << db.entries.size() << " records" << (again == text ? "" : " (non-canonical layout)")
            << "\n";
  return 0;
}

int cmd_db_census(const std::string& path) {
  for (const auto& row : sb::census(load_db(path, false)))
    std::cout << row.n << " " << row.skew << " " << row.classical << "\n";
  return 0;
}

int cmd_db_query(const SourceOptions& s, const AnalyzeOptions& q, const std::string& format) {
  for (const auto& it : load_items(s)) {
    auto d = sb::describe_brace(it.brace);
    if (!q.add.empty() && d.additive.name != q.add) continue;
    if (!q.mul.empty() && d.multiplicative.name != q.mul) continue;
    std::cout << format_row(format, {{"n", std::to_string(it.n)},
                                     {"index", std::to_string(it.index)},
                                     {"add", d.additive.name},
                                     {"mul", d.multiplicative.name},
                                     {"socle", std::to_string(d.socle_size)},
                                     {"ideals", std::to_string(d.ideal_count)},
                                     {"classical", yes(d.classical)},
                                     {"trivial", yes(d.trivial)},
                                     {"two_sided", yes(d.two_sided)}});
  }
  return 0;
}

void add_source(CLI::App* cmd, SourceOptions& s, bool with_classical = true) {
  cmd->add_option("--db", s.db, std::string("SBDB database file (default: $") + kDbEnv + ")");
  cmd->add_option("--order", s.order, "order, or first order of a range")->check(CLI::Range(1, 1 << 20));
  cmd->add_option("--to", s.to, "last order of the range")->needs("--order");
  cmd->add_flag("--deep", s.deep, "allow order 16 when enumerating");
  if (with_classical) cmd->add_flag("--classical", s.classical, "classical braces only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite skew braces: enumeration, storage and analysis"};
  app.require_subcommand(1);
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "human";
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "human, tsv or records")
        ->check(CLI::IsMember({"human", "tsv", "records"}));
  };

  SourceOptions src;
  AnalyzeOptions an;
  std::string out_path, file;
  std::size_t index = 0;

  auto* enumerate = app.add_subcommand("enumerate", "enumerate braces and print 'n s b' per order");
  enumerate->add_option("--order", src.order, "order")->required();
  enumerate->add_option("--to", src.to, "last order of a range");
  enumerate->add_flag("--classical", src.classical, "classical braces only");
  enumerate->add_flag("--deep", src.deep, "allow order 16");
  enumerate->add_option("--out", out_path, "write an SBDB database");

  auto* analyze = app.add_subcommand("analyze", "full report for selected braces");
  add_source(analyze, src, false);
  auto* an_file = analyze->add_option("--file", an.file, "brace or group table file");
  analyze->add_option("--index", an.index, "index within the order")->needs("--order");
  analyze->add_option("--add", an.add, "additive group name, e.g. C8");
  analyze->add_option("--mul", an.mul, "multiplicative group name, e.g. C4xC2");
  for (const char* opt : {"--db", "--order", "--index", "--add", "--mul"}) an_file->excludes(opt);

  auto* check = app.add_subcommand("check", "radical theorems and Yang-Baxter checks, one line per brace");
  add_source(check, src);
  add_jobs(check);
  add_format(check);

  auto* experiments = app.add_subcommand("experiments", "two-sided sweep, simple census and series scans");
  add_source(experiments, src);
  add_jobs(experiments);

  auto* ybe = app.add_subcommand("ybe", "verify the Yang-Baxter solutions");
  add_source(ybe, src);
  add_jobs(ybe);

  auto* db = app.add_subcommand("db", "database tools");
  db->require_subcommand(1);
  auto* pack = db->add_subcommand("pack", "pack a brace table file into a one-record database");
  pack->add_option("file", file, "brace file")->required();
  pack->add_option("--out", out_path, "output file");
  auto* unpack = db->add_subcommand("unpack", "print one record as brace tables");
  unpack->add_option("--db", src.db, "database file");
  unpack->add_option("--order", src.order, "order")->required();
  unpack->add_option("--index", index, "index")->required();
  auto* verify = db->add_subcommand("verify", "validate every record and the text layout");
  verify->add_option("--db", src.db, "database file");
  auto* census = db->add_subcommand("census", "print 'n s b' per order");
  census->add_option("--db", src.db, "database file");
  auto* query = db->add_subcommand("query", "list braces matching a description");
  add_source(query, src);
  query->add_option("--add", an.add, "additive group name");
  query->add_option("--mul", an.mul, "multiplicative group name");
  add_format(query);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    auto required_db = [&] {
      auto p = db_path(src);
      if (p.empty()) throw sb::Error(sb::errc::io, std::string("no database: give --db or set ") + kDbEnv);
      return p;
    };
    if (*enumerate) return cmd_enumerate(src, out_path);
    if (*analyze) return cmd_analyze(src, an);
    if (*check) return cmd_check(src, jobs, format);
    if (*experiments) return cmd_experiments(src, jobs);
    if (*ybe) return cmd_ybe(src, jobs);
    if (*pack) return cmd_db_pack(file, out_path);
    if (*unpack) return cmd_db_unpack(required_db(), src.order, index);
    if (*verify) return cmd_db_verify(required_db());
    if (*census) return cmd_db_census(required_db());
    if (*query) return cmd_db_query(src, an, format);
  } catch (const sb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
