#include "detgb/determinantal.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "detgb/errors.hpp"

namespace detgb {

namespace {

std::size_t choose(int a, int b) {
  if (b < 0 || a < b) return 0;
  std::size_t r = 1;
  for (int k = 1; k <= b; ++k) r = r * static_cast<std::size_t>(a - b + k) / static_cast<std::size_t>(k);
  return r;
}

void require_subset(std::span<const int> cols, int q) {
  for (std::size_t t = 0; t < cols.size(); ++t) {
    if (cols[t] < 1 || cols[t] > q) throw ShapeError("column index out of range");
    if (t > 0 && cols[t] <= cols[t - 1]) throw ShapeError("column indices must be strictly increasing");
  }
}

// Determinants of rows[0..k) against every column mask of popcount k, for
// k up to rows.size(), by Laplace expansion along the last row.
std::unordered_map<std::uint32_t, Polynomial> minor_table(const PolyMatrix& A, const std::vector<int>& rows,
                                                          const std::vector<int>& cols) {
  const PrimeField& F = A.field();
  const int n = A.nvars();
  std::unordered_map<std::uint32_t, Polynomial> dp;
  dp.emplace(0u, Polynomial::term(Monomial(n), 1, F));
  const auto m = static_cast<int>(cols.size());
  for (std::size_t k = 1; k <= rows.size(); ++k) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      Polynomial det(n, F);
      int t = 0;
      for (int c = 0; c < m; ++c) {
        if (!(mask & (1u << c))) continue;
        const Polynomial& a = A.at(rows[k - 1] - 1, cols[static_cast<std::size_t>(c)] - 1);
        const auto it = dp.find(mask & ~(1u << c));
        if (!a.is_zero() && !it->second.is_zero()) {
          const Polynomial term = a * it->second;
          if ((static_cast<int>(k) - 1 + t) % 2 == 0)
            det += term;
          else
            det -= term;
        }
        ++t;
      }
      dp.emplace(mask, std::move(det));
    }
  }
  return dp;
}

std::uint32_t mask_of(std::span<const int> sub, const std::vector<int>& cols) {
  std::uint32_t mask = 0;
  for (int c : sub) {
    auto it = std::find(cols.begin(), cols.end(), c);
    mask |= 1u << static_cast<unsigned>(it - cols.begin());
  }
  return mask;
}

std::vector<int> iota1(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

}  // namespace

std::size_t subset_ordinal(std::span<const int> cols, int q) {
  require_subset(cols, q);
  const int r = static_cast<int>(cols.size());
  std::size_t ord = 0;
  int prev = 0;
  for (int t = 0; t < r; ++t) {
    for (int v = prev + 1; v < cols[static_cast<std::size_t>(t)]; ++v) ord += choose(q - v, r - t - 1);
    prev = cols[static_cast<std::size_t>(t)];
  }
  return ord;
}

std::vector<int> subset_from_ordinal(std::size_t ordinal, int r, int q) {
  if (r < 0 || r > q || ordinal >= choose(q, r)) throw ShapeError("subset ordinal out of range");
  std::vector<int> cols;
  int v = 1;
  for (int t = 0; t < r; ++t) {
    while (true) {
      const std::size_t block = choose(q - v, r - t - 1);
      if (ordinal < block) break;
      ordinal -= block;
      ++v;
    }
    cols.push_back(v++);
  }
  return cols;
}

std::vector<std::vector<int>> lex_subsets(int q, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > q) return out;
  std::vector<int> cur = iota1(r);
  while (true) {
    out.push_back(cur);
    int t = r - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == q - r + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < r; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

MinorIndex minor_index(std::vector<int> cols, int q) {
  const auto ord = subset_ordinal(cols, q);
  return {std::move(cols), ord};
}

PolyMatrix jacobian(const Polynomial& g, const std::vector<Polynomial>& F) {
  if (g.is_zero()) throw ShapeError("g must be nonzero");
  if (!g.is_homogeneous()) throw ShapeError("g must be homogeneous");
  const int d0 = g.degree();
  for (const auto& f : F) {
    if (f.nvars() != g.nvars()) throw DimensionError("system over different rings");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d0)
      throw ShapeError("every polynomial of the system must be homogeneous of degree " + std::to_string(d0));
  }
  const int n = g.nvars();
  std::vector<Polynomial> entries;
  entries.reserve((F.size() + 1) * static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) entries.push_back(partial_derivative(g, j));
  for (const auto& f : F)
    for (int j = 0; j < n; ++j) entries.push_back(partial_derivative(f, j));
  return PolyMatrix(static_cast<int>(F.size()) + 1, n, d0 - 1, std::move(entries));
}

Polynomial minor(const PolyMatrix& A, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size() || rows.empty()) throw ShapeError("minor needs matching row and column counts");
  require_subset(rows, A.rows());
  require_subset(cols, A.cols());
  const std::vector<int> r(rows.begin(), rows.end());
  const std::vector<int> c(cols.begin(), cols.end());
  auto dp = minor_table(A, r, c);
  return dp.at((1u << c.size()) - 1);
}

std::vector<Polynomial> maximal_minors(const PolyMatrix& A) {
  const int p = A.rows();
  const int q = A.cols();
  if (p > q) throw ShapeError("maximal minors need p <= q");
  if (q > 24) throw ShapeError("too many columns");
  const auto cols = iota1(q);
  auto dp = minor_table(A, iota1(p), cols);
  std::vector<Polynomial> out;
  for (const auto& T : lex_subsets(q, p)) out.push_back(dp.at(mask_of(T, cols)));
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& A, int r) {
  if (r < 1 || r > A.rows() || A.rows() > A.cols()) throw ShapeError("minor size out of range");
  if (r == A.rows()) return maximal_minors(A);
  std::vector<Polynomial> out;
  for (const auto& C : lex_subsets(A.cols(), r))
    for (const auto& R : lex_subsets(A.rows(), r)) out.push_back(minor(A, R, C));
  return out;
}

ModuleElement en_first_syzygy(const PolyMatrix& A, int dup_row, const std::vector<int>& cols) {
  const int p = A.rows();
  if (dup_row < 1 || dup_row > p) throw ShapeError("duplicated row out of range");
  if (static_cast<int>(cols.size()) != p + 1) throw ShapeError("boundary needs p+1 columns");
  require_subset(cols, A.cols());
  ModuleElement v(A.nvars(), A.field());
  for (std::size_t t = 0; t < cols.size(); ++t) {
    std::vector<int> rest;
    for (std::size_t u = 0; u < cols.size(); ++u)
      if (u != t) rest.push_back(cols[u]);
    const Polynomial& a = A.at(dup_row - 1, cols[t] - 1);
    v.add(BasisIndex::wedge(rest), t % 2 == 0 ? a : -a);
  }
  return v;
}

Polynomial evaluate_minors(const ModuleElement& v, const PolyMatrix& A) {
  Polynomial out(A.nvars(), A.field());
  const auto rows = iota1(A.rows());
  for (const auto& [idx, comp] : v.components()) {
    if (idx.kind() != BasisIndex::Kind::Wedge || static_cast<int>(idx.ids().size()) != A.rows())
      throw TypeError("component is not at a maximal-minor position");
    out += comp * minor(A, rows, idx.ids());
  }
  return out;
}

std::vector<ENSyzygyTerm> en_syzygy_terms(const PolyMatrix& A, int D) {
  const int p = A.rows();
  const int q = A.cols();
  const int e = A.entry_degree();
  if (p > q) throw ShapeError("syzygy terms need p <= q");
  std::vector<ENSyzygyTerm> out;
  const int bound = D - p * e;
  if (q == p || bound < e) return out;

  // Nonzero entries of columns 1..q-p, column-major; prefix[k] counts those
  // in the first k columns.
  std::vector<Polynomial> C;
  std::vector<int> prefix{0};
  for (int c = 0; c < q - p; ++c) {
    for (int i = 0; i < p; ++i)
      if (!A.at(i, c).is_zero()) C.push_back(A.at(i, c));
    prefix.push_back(static_cast<int>(C.size()));
  }
  if (C.empty()) return out;
  SigGBOptions opts;
  opts.collect_basis = false;
  const GBResult cols_gb = sig_gb(C, bound, {}, opts);

  for (int k = 1; k <= q - p; ++k) {
    const int cnt = prefix[static_cast<std::size_t>(k)];
    if (cnt == 0) continue;
    const auto leads = cols_gb.prefix_basis_leads(cnt);
    for (const auto& tail : lex_subsets(q - k - 1, p - 1)) {
      std::vector<int> T{k + 1};
      for (int v : tail) T.push_back(v + k + 1);
      const MinorIndex pos = minor_index(T, q);
      for (const auto& lm : leads) out.push_back({lm.mono, pos, k});
    }
  }
  return out;
}

SyzygySignatureSet en_leading_terms(const PolyMatrix& A, int D, int gen_offset) {
  SyzygySignatureSet S;
  for (const auto& t : en_syzygy_terms(A, D))
    S.insert(t.lead, gen_offset + static_cast<int>(t.position.ordinal) + 1);
  return S;
}

std::map<int, std::size_t> layer_counts(const std::vector<ENSyzygyTerm>& terms, int nvars, int max_degree) {
  std::map<std::size_t, std::vector<Monomial>> by_pos;
  for (const auto& t : terms) by_pos[t.position.ordinal].push_back(t.lead);
  std::map<int, std::size_t> out;
  for (int delta = 0; delta <= max_degree; ++delta) {
    std::size_t count = 0;
    const auto monos = enumerate_monomials(nvars, delta);
    for (const auto& [pos, leads] : by_pos)
      for (const auto& m : monos)
        if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& g) { return g.divides(m); })) ++count;
    out[delta] = count;
  }
  return out;
}

GBResult max_minors_sig_gb(const PolyMatrix& A, int D, bool use_en, const SigGBOptions& opts) {
  const auto M = as_module_elements(maximal_minors(A));
  const std::vector<int> degrees(M.size(), A.rows() * A.entry_degree());
  const SyzygySignatureSet S = use_en ? en_leading_terms(A, D) : SyzygySignatureSet{};
  return sig_gb(M, degrees, D, S, opts);
}

std::vector<Polynomial> CritSystem::generators() const {
  std::vector<Polynomial> gens = F;
  for (auto& m : maximal_minors(jac)) gens.push_back(std::move(m));
  return gens;
}

std::vector<int> CritSystem::generator_degrees() const {
  std::vector<int> deg(F.size(), d0);
  const std::size_t nm = choose(nvars(), p() + 1);
  deg.insert(deg.end(), nm, (p() + 1) * (d0 - 1));
  return deg;
}

CritSystem make_crit_system(const std::vector<Polynomial>& F, const Polynomial& g) {
  CritSystem sys;
  sys.F = F;
  sys.g = g;
  sys.jac = jacobian(g, F);
  sys.d0 = g.degree();
  if (sys.d0 < 2) throw ShapeError("critical-point systems need degree >= 2 (the Jacobian would be constant)");
  if (sys.p() + 1 > g.nvars()) throw ShapeError("critical-point systems need p+1 <= n");
  return sys;
}

SyzygySignatureSet crit_syzygy_signatures(const CritSystem& sys, int D) {
  return en_leading_terms(sys.jac, D, sys.p());
}

GBResult crit_gb(const std::vector<Polynomial>& F, const Polynomial& g, int D, bool use_en, const SigGBOptions& opts) {
  const CritSystem sys = make_crit_system(F, g);
  const auto gens = as_module_elements(sys.generators());
  const SyzygySignatureSet S = use_en ? crit_syzygy_signatures(sys, D) : SyzygySignatureSet{};
  return sig_gb(gens, sys.generator_degrees(), D, S, opts);
}

GBResult crit_lazard_gb(const std::vector<Polynomial>& F, const Polynomial& g, int D, const SigGBOptions& opts) {
  const CritSystem sys = make_crit_system(F, g);
  return lazard_gb(as_module_elements(sys.generators()), sys.generator_degrees(), D, opts);
}

bool DirectSumReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const DirectSumRow& r) { return r.holds; });
}

std::string DirectSumReport::to_string() const {
  std::ostringstream os;
  os << "d syz_all syz_F syz_minors cross literal holds\n";
  for (const auto& r : rows)
    os << r.d << ' ' << r.syz_all << ' ' << r.syz_F << ' ' << r.syz_minors << ' ' << r.cross << ' '
       << (r.literal_sum ? "yes" : "no") << ' ' << (r.holds ? "yes" : "no") << '\n';
  if (minors_vanish) os << "warning: all minors vanish\n";
  os << "verdict: " << (holds() ? "holds" : "fails") << '\n';
  return os.str();
}

DirectSumReport syzygy_direct_sum_check(const std::vector<Polynomial>& F, const Polynomial& g, int D) {
  if (F.empty()) throw ShapeError("the direct-sum check needs p >= 1");
  const CritSystem sys = make_crit_system(F, g);
  const auto gens = sys.generators();
  const auto degs = sys.generator_degrees();
  const std::size_t p = F.size();

  const auto all = as_module_elements(gens);
  const std::vector<ModuleElement> fpart(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(p));
  const std::vector<ModuleElement> mpart(all.begin() + static_cast<std::ptrdiff_t>(p), all.end());
  const std::vector<int> fdeg(degs.begin(), degs.begin() + static_cast<std::ptrdiff_t>(p));
  const std::vector<int> mdeg(degs.begin() + static_cast<std::ptrdiff_t>(p), degs.end());

  DirectSumReport rep;
  rep.minors_vanish = std::all_of(mpart.begin(), mpart.end(), [](const ModuleElement& m) { return m.is_zero(); });
  std::vector<Polynomial> products;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = p; j < gens.size(); ++j) {
      auto prod = gens[i] * gens[j];
      if (!prod.is_zero()) products.push_back(std::move(prod));
    }
  const auto pel = as_module_elements(products);
  const std::vector<int> pdeg(pel.size(), fdeg.front() + mdeg.front());

  for (int d = 0; d <= D; ++d) {
    DirectSumRow r;
    r.d = d;
    const auto [rank_all, rows_all] = macaulay_rank(all, degs, d);
    const auto [rank_f, rows_f] = macaulay_rank(fpart, fdeg, d);
    const auto [rank_m, rows_m] = macaulay_rank(mpart, mdeg, d);
    r.syz_all = rows_all - rank_all;
    r.syz_F = rows_f - rank_f;
    r.syz_minors = rows_m - rank_m;
    r.cross = pel.empty() ? 0 : macaulay_rank(pel, pdeg, d).first;
    r.literal_sum = r.syz_all == r.syz_F + r.syz_minors;
    r.holds = r.syz_all == r.syz_F + r.syz_minors + r.cross;
    rep.rows.push_back(r);
  }
  return rep;
}

}  // namespace detgb
