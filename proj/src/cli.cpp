#include "detgb/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "detgb/determinantal.hpp"
#include "detgb/errors.hpp"
#include "detgb/sig_gb.hpp"

namespace detgb {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> w;
  for (std::string s; is >> s;) w.push_back(s);
  return w;
}

int to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
  if (used != s.size()) throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

std::vector<int> parse_range(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) {
      out.push_back(to_int(part, what));
      continue;
    }
    const int a = to_int(part.substr(0, colon), what);
    const int b = to_int(part.substr(colon + 1), what);
    if (b < a) throw ParseError("empty range '" + part + "' for " + what);
    for (int v = a; v <= b; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty range for " + what);
  return out;
}

std::vector<ModuleMonomial> leads_of(const GBResult& r) { return r.leading_monomials(); }

std::string lm_text(const ModuleMonomial& m) { return m.mono.to_string(); }

GBResult run_gb(const Instance& inst, int D, bool use_en, const SigGBOptions& opts) {
  if (inst.kind == Instance::Kind::Matrix) return max_minors_sig_gb(inst.matrix, D, use_en, opts);
  return crit_gb(inst.F, inst.g, D, use_en, opts);
}

GBResult run_lazard(const Instance& inst, int D) {
  SigGBOptions opts;
  opts.collect_basis = false;
  if (inst.kind == Instance::Kind::Matrix) {
    const auto M = as_module_elements(maximal_minors(inst.matrix));
    return lazard_gb(M, std::vector<int>(M.size(), inst.p * inst.d0), D, opts);
  }
  return crit_lazard_gb(inst.F, inst.g, D, opts);
}

std::string stats_jsonl(const GBResult& r) {
  std::string out;
  for (const auto& st : r.stats) {
    nlohmann::ordered_json j;
    j["d"] = st.d;
    j["rows_built"] = st.rows_built;
    j["rows_skipped"] = st.rows_skipped;
    j["zero_reductions"] = st.zero_reductions;
    j["rank"] = st.rank;
    out += j.dump() + "\n";
  }
  return out;
}

std::string basis_text(const Instance& inst, const GBResult& r) {
  std::ostringstream os;
  os << "# " << (inst.kind == Instance::Kind::Matrix ? "minors" : "crit") << " nvars " << inst.nvars
     << " degree_bound " << r.degree_bound << " size " << r.basis.size() << '\n';
  for (const auto& b : r.basis) os << b.component(BasisIndex::free(1)).to_string() << '\n';
  return os.str();
}

void check_kind(const Instance& inst, const std::string& kind) {
  if (kind.empty()) return;
  const bool matrix = inst.kind == Instance::Kind::Matrix;
  if (kind == "minors" && !matrix) throw ShapeError("--kind minors needs a matrix instance");
  if (kind == "crit" && matrix) throw ShapeError("--kind crit needs a system instance");
}

struct Mismatch {
  std::string what;
};

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    for (std::string line; std::getline(is, line);) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      lines.push_back(line.substr(first, last - first + 1));
    }
  }
  if (lines.size() < 3) throw ParseError("instance needs a prime, nvars and a header line");
  Instance inst;
  auto w = split_words(lines[0]);
  if (w.size() != 2 || w[0] != "prime") throw ParseError("first line must be 'prime P'");
  const int prime = to_int(w[1], "prime");
  if (prime < 3 || !is_prime(static_cast<std::uint64_t>(prime))) throw ParseError("'" + w[1] + "' is not an odd prime");
  inst.field = PrimeField(static_cast<std::uint32_t>(prime));
  w = split_words(lines[1]);
  if (w.size() != 2 || w[0] != "nvars") throw ParseError("second line must be 'nvars N'");
  inst.nvars = to_int(w[1], "nvars");
  if (inst.nvars < 1) throw ParseError("nvars must be positive");

  w = split_words(lines[2]);
  std::size_t expected = 0;
  if (w.size() == 5 && w[0] == "matrix" && w[3] == "degree") {
    inst.kind = Instance::Kind::Matrix;
    inst.p = to_int(w[1], "rows");
    inst.q = to_int(w[2], "columns");
    inst.d0 = to_int(w[4], "degree");
    if (inst.p < 1 || inst.q < inst.p) throw ShapeError("matrix shape needs 1 <= p <= q");
    expected = static_cast<std::size_t>(inst.p) * static_cast<std::size_t>(inst.q);
  } else if (w.size() == 4 && w[0] == "system" && w[2] == "degree") {
    inst.kind = Instance::Kind::System;
    inst.p = to_int(w[1], "p");
    inst.d0 = to_int(w[3], "degree");
    if (inst.p < 1) throw ShapeError("system needs p >= 1");
    expected = static_cast<std::size_t>(inst.p) + 1;
  } else {
    throw ParseError("third line must be 'matrix P Q degree D0' or 'system P degree D0'");
  }
  if (inst.d0 < 0) throw ShapeError("negative degree");
  if (lines.size() - 3 != expected)
    throw ParseError("expected " + std::to_string(expected) + " polynomials, found " + std::to_string(lines.size() - 3));

  std::vector<Polynomial> polys;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    auto f = parse_polynomial(lines[k], inst.nvars, inst.field);
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != inst.d0))
      throw ShapeError("polynomial on line " + std::to_string(k + 1) + " is not homogeneous of degree " +
                       std::to_string(inst.d0));
    polys.push_back(std::move(f));
  }
  if (inst.kind == Instance::Kind::Matrix) {
    inst.matrix = PolyMatrix(inst.p, inst.q, inst.d0, std::move(polys));
  } else {
    inst.g = polys.front();
    inst.F.assign(polys.begin() + 1, polys.end());
  }
  return inst;
}

Instance read_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  os << "prime " << inst.field.modulus() << '\n' << "nvars " << inst.nvars << '\n';
  if (inst.kind == Instance::Kind::Matrix) {
    os << "matrix " << inst.p << ' ' << inst.q << " degree " << inst.d0 << '\n';
    for (const auto& e : inst.matrix.entries()) os << e.to_string() << '\n';
  } else {
    os << "system " << inst.p << " degree " << inst.d0 << '\n' << inst.g.to_string() << '\n';
    for (const auto& f : inst.F) os << f.to_string() << '\n';
  }
  return os.str();
}

Instance generate_minors_instance(int n, int p, int q, int d0, std::uint32_t prime, std::uint64_t seed) {
  if (n < 2 || p < 1 || q < p || d0 < 1) throw ShapeError("minors instances need n >= 2, 1 <= p <= q, d0 >= 1");
  Instance inst;
  inst.kind = Instance::Kind::Matrix;
  inst.field = PrimeField(prime);
  inst.nvars = n;
  inst.p = p;
  inst.q = q;
  inst.d0 = d0;
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> e;
  for (int k = 0; k < p * q; ++k) e.push_back(random_homogeneous(n, d0, inst.field, rng));
  inst.matrix = PolyMatrix(p, q, d0, std::move(e));
  return inst;
}

Instance generate_crit_instance(int n, int p, int d0, std::uint32_t prime, std::uint64_t seed) {
  if (n < 2 || p < 1 || p + 1 > n || d0 < 2) throw ShapeError("crit instances need n >= 2, 1 <= p <= n-1, d0 >= 2");
  Instance inst;
  inst.kind = Instance::Kind::System;
  inst.field = PrimeField(prime);
  inst.nvars = n;
  inst.p = p;
  inst.d0 = d0;
  std::mt19937_64 rng(seed);
  inst.g = random_homogeneous(n, d0, inst.field, rng);
  for (int i = 0; i < p; ++i) inst.F.push_back(random_homogeneous(n, d0, inst.field, rng));
  return inst;
}

int default_degree_bound(const Instance& inst) {
  if (inst.kind == Instance::Kind::Matrix) return degree_bound_minors(inst.nvars, inst.p, inst.d0);
  return degree_bound_crit(inst.nvars, inst.p, inst.d0);
}

std::string VerifyReport::verdict() const {
  if (kind == Instance::Kind::Matrix) return derived_ok ? "match" : "mismatch";
  if (derived_ok && paper_ok) return "ambiguous";
  if (derived_ok) return "derived";
  if (paper_ok) return "paper-literal";
  return "none";
}

bool VerifyReport::mismatch() const { return !derived_ok && !paper_ok; }

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  const bool matrix = kind == Instance::Kind::Matrix;
  os << "degree_bound " << degree_bound << '\n';
  if (matrix)
    os << "d rank predicted H_measured H_predicted status\n";
  else
    os << "d rank rank_derived rank_paper H_measured H_derived H_paper derived paper\n";
  for (const auto& r : rows) {
    const bool dr = r.rank == r.rank_derived && r.h_measured == r.h_derived;
    const bool pr = r.rank == r.rank_paper && r.h_measured == r.h_paper;
    if (matrix) {
      os << r.d << ' ' << r.rank << ' ' << r.rank_derived << ' ' << r.h_measured << ' ' << r.h_derived << ' '
         << (dr ? "match" : "MISMATCH") << '\n';
    } else {
      os << r.d << ' ' << r.rank << ' ' << r.rank_derived << ' ' << r.rank_paper << ' ' << r.h_measured << ' '
         << r.h_derived << ' ' << r.h_paper << ' ' << (dr ? "match" : "MISMATCH") << ' ' << (pr ? "match" : "MISMATCH")
         << '\n';
    }
  }
  if (!matrix) {
    os << "derived: " << (derived_ok ? "consistent" : "inconsistent") << '\n';
    os << "paper-literal: " << (paper_ok ? "consistent" : "inconsistent") << '\n';
  }
  os << "verdict: " << verdict() << '\n';
  return os.str();
}

VerifyReport verify_instance(const Instance& inst, int D) {
  VerifyReport rep;
  rep.kind = inst.kind;
  rep.degree_bound = D;
  const int n = inst.nvars;
  const GBResult lz = run_lazard(inst, D);
  std::map<int, std::size_t> ranks;
  for (const auto& st : lz.stats) ranks[st.d] = st.rank;

  const bool matrix = inst.kind == Instance::Kind::Matrix;
  const PolyMatrix& A = matrix ? inst.matrix : make_crit_system(inst.F, inst.g).jac;
  // Degree of the minors the syzygy terms are attached to.
  const int shift = A.rows() * A.entry_degree();
  const auto layers = layer_counts(en_syzygy_terms(A, D), n, std::max(D - shift, 0));

  rep.derived_ok = true;
  rep.paper_ok = true;
  for (int d = 0; d <= D; ++d) {
    VerifyRow r;
    r.d = d;
    r.rank = ranks.count(d) ? BigInt(ranks[d]) : BigInt(0);
    r.h_measured = d - shift >= 0 && layers.count(d - shift) ? BigInt(layers.at(d - shift)) : BigInt(0);
    if (matrix) {
      r.rank_derived = hf_minors_ideal(n, inst.p, inst.q, inst.d0, d);
      r.rank_paper = r.rank_derived;
      r.h_derived = syzygy_count(n, inst.p, inst.q, inst.d0, d);
      r.h_paper = r.h_derived;
    } else {
      const int p = inst.p;
      for (auto mode : {EntryMode::Derived, EntryMode::Paper}) {
        const BigInt rk = binomial(n + d - 1, n - 1) - hf_crit(n, p, inst.d0, d, mode);
        const int sh = (p + 1) * entry_degree(inst.d0, mode);
        BigInt h = 0;
        if (d - sh >= 0)
          for (int k = 1; k <= n - p - 1; ++k) h += hf_column_ideal(n, p, inst.d0, k, d - sh, mode) * binomial(n - k - 1, p);
        (mode == EntryMode::Derived ? r.rank_derived : r.rank_paper) = rk;
        (mode == EntryMode::Derived ? r.h_derived : r.h_paper) = h;
      }
    }
    if (r.rank != r.rank_derived || r.h_measured != r.h_derived) rep.derived_ok = false;
    if (r.rank != r.rank_paper || r.h_measured != r.h_paper) rep.paper_ok = false;
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

namespace {

int cmd_gen(const std::string& kind, int n, int p, int q, int d0, std::uint32_t prime, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
  Instance inst;
  if (kind == "minors")
    inst = generate_minors_instance(n, p, q > 0 ? q : n + p - 1, d0, prime, seed);
  else if (kind == "crit")
    inst = generate_crit_instance(n, p, d0, prime, seed);
  else
    throw ParseError("--kind must be minors or crit");
  const auto text = format_instance(inst);
  if (output.empty())
    out << text;
  else
    write_file(output, text);
  return 0;
}

int cmd_gb(const std::string& path, const std::string& kind, int D, bool oracle, bool no_en, const std::string& output,
           const std::string& stats_csv, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance(path);
  check_kind(inst, kind);
  if (D < 0) D = default_degree_bound(inst);
  const auto t0 = std::chrono::steady_clock::now();
  const GBResult r = run_gb(inst, D, !no_en, {});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& st : r.stats)
    DETGB_CHECK(st.rows_built == st.rank + st.zero_reductions, "row accounting is inconsistent");
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';

  std::ostream& info = output.empty() ? err : out;
  if (output.empty()) {
    out << basis_text(inst, r);
  } else {
    write_file(output, basis_text(inst, r));
    write_file(output + ".stats.jsonl", stats_jsonl(r));
  }
  if (!stats_csv.empty()) write_file(stats_csv, row_stats_csv(r));
  info << "basis " << r.basis.size() << " rows_built " << r.total_rows_built() << " rows_skipped "
       << r.total_rows_skipped() << " zero_reductions " << r.total_zero_reductions() << " seconds " << secs << '\n';

  if (oracle) {
    const auto mine = leads_of(r);
    const auto ref = leads_of(run_lazard(inst, D));
    std::set<std::string> a, b;
    for (const auto& m : mine) a.insert(lm_text(m));
    for (const auto& m : ref) b.insert(lm_text(m));
    std::vector<std::string> only_a, only_b;
    for (const auto& s : a)
      if (!b.count(s)) only_a.push_back(s);
    for (const auto& s : b)
      if (!a.count(s)) only_b.push_back(s);
    if (only_a.empty() && only_b.empty()) {
      info << "oracle: leading monomials agree (" << a.size() << ")\n";
    } else {
      for (const auto& s : only_a) info << "oracle: only in sig_gb " << s << '\n';
      for (const auto& s : only_b) info << "oracle: only in lazard " << s << '\n';
      return 4;
    }
  }
  return 0;
}

int cmd_compare(const std::string& ns, const std::string& ps, const std::string& d0s, int q, bool extra,
                const std::string& output, std::ostream& out) {
  const auto rows = speedup_table(parse_range(ns, "--n"), parse_range(ps, "--p"), parse_range(d0s, "--d0"), q);
  const auto csv = speedup_csv(rows, extra);
  if (output.empty())
    out << csv;
  else
    write_file(output, csv);
  return 0;
}

int cmd_verify(const std::string& path, int D, const std::string& output, std::ostream& out) {
  const Instance inst = read_instance(path);
  if (D < 0) D = default_degree_bound(inst);
  const auto rep = verify_instance(inst, D);
  const auto text = rep.to_string();
  if (output.empty())
    out << text;
  else
    write_file(output, text);
  return rep.mismatch() ? 4 : 0;
}

int cmd_estimate(int n, int p, int d0, double omega, const std::string& mode, std::ostream& out) {
  EstimatorParams P;
  P.n = n;
  P.p = p;
  P.d0 = d0;
  P.omega = omega;
  P.mode = parse_entry_mode(mode);
  out << complexity_estimate(P) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases of determinantal and critical-point ideals"};
  app.require_subcommand(1);

  std::string kind, output, path, mode = "derived", stats_csv;
  std::string ns = "4:5", ps = "3", d0s = "3";
  int n = 0, p = 0, q = 0, d0 = 0, D = -1;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  double omega = 2.81;
  bool oracle = false, no_en = false, extra = false;

  auto* gen = app.add_subcommand("gen", "write a random generic instance");
  gen->add_option("--kind", kind, "minors or crit")->required();
  gen->add_option("--n", n, "number of variables")->required();
  gen->add_option("--p", p, "rows (minors) or number of constraints (crit)")->required();
  gen->add_option("--q", q, "columns; defaults to n+p-1");
  gen->add_option("--d0", d0, "entry or polynomial degree")->required();
  gen->add_option("--prime", prime, "field characteristic");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--output", output, "instance file (stdout if absent)");

  auto* gb = app.add_subcommand("gb", "compute a truncated Groebner basis");
  gb->add_option("instance", path)->required();
  gb->add_option("--kind", kind, "minors or crit; inferred from the file");
  gb->add_option("--degree-bound", D, "override the default degree bound");
  gb->add_flag("--oracle", oracle, "rerun without criteria and diff leading monomials");
  gb->add_flag("--no-en", no_en, "do not seed the syzygy criterion");
  gb->add_option("--output", output, "basis file; stats go to <output>.stats.jsonl");
  gb->add_option("--stats-csv", stats_csv, "per-degree row statistics as CSV");

  auto* cmp = app.add_subcommand("compare", "row-count ratios against the Lazard bound");
  cmp->add_option("--n", ns, "variables, e.g. 4:15");
  cmp->add_option("--p", ps, "rows, e.g. 3 or 3,4");
  cmp->add_option("--d0", d0s, "entry degrees, e.g. 3:60");
  cmp->add_option("--q", q, "fixed column count (default n+p-1)");
  cmp->add_option("--mode", mode, "derived or paper");
  cmp->add_flag("--extra", extra, "append plain-row speedup columns");
  cmp->add_option("--output", output, "CSV file (stdout if absent)");

  auto* ver = app.add_subcommand("verify", "compare Macaulay ranks with Hilbert-function predictions");
  ver->add_option("instance", path)->required();
  ver->add_option("--degree-bound", D, "override the default degree bound");
  ver->add_option("--output", output, "report file (stdout if absent)");

  auto* est = app.add_subcommand("estimate", "arithmetic cost estimate for a critical-point system");
  est->add_option("--n", n)->required();
  est->add_option("--p", p)->required();
  est->add_option("--d0", d0)->required();
  est->add_option("--omega", omega, "matrix multiplication exponent");
  est->add_option("--mode", mode, "derived or paper");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(kind, n, p, q, d0, prime, seed, output, out);
    if (*gb) return cmd_gb(path, kind, D, oracle, no_en, output, stats_csv, out, err);
    if (*cmp) {
      parse_entry_mode(mode);
      return cmd_compare(ns, ps, d0s, q, extra, output, out);
    }
    if (*ver) return cmd_verify(path, D, output, out);
    if (*est) return cmd_estimate(n, p, d0, omega, mode, out);
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace detgb
