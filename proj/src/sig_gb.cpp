#include "detgb/sig_gb.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

void SyzygySignatureSet::insert(const ModuleMonomial& m) {
  if (m.index.kind() != BasisIndex::Kind::Free) throw TypeError("syzygy signatures use free positions");
  if (!seen_.insert(m).second) return;
  elements_.push_back(m);
  by_position_[m.index.free_index()].push_back(m.mono);
}

bool SyzygySignatureSet::contains(const Monomial& tau, int position) const {
  auto it = by_position_.find(position);
  if (it == by_position_.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [&](const Monomial& t) { return t.divides(tau); });
}

const std::vector<Monomial>& SyzygySignatureSet::at(int position) const {
  static const std::vector<Monomial> empty;
  auto it = by_position_.find(position);
  return it == by_position_.end() ? empty : it->second;
}

std::vector<ModuleMonomial> sorted_monomials(std::vector<ModuleMonomial> v) {
  std::sort(v.begin(), v.end(), [](const ModuleMonomial& a, const ModuleMonomial& b) { return pot_cmp(a, b) > 0; });
  return v;
}

std::vector<ModuleMonomial> GBResult::leading_monomials() const {
  return prefix_basis_leads(static_cast<int>(order.size()));
}

std::vector<ModuleMonomial> GBResult::prefix_basis_leads(int count) const {
  std::vector<ModuleMonomial> out;
  for (const auto& pl : prefix_leads)
    if (pl.gen < count && count <= pl.until) out.push_back(pl.lm);
  return sorted_monomials(std::move(out));
}

std::size_t GBResult::total_rows_built() const {
  std::size_t s = 0;
  for (const auto& st : stats) s += st.rows_built;
  return s;
}

std::size_t GBResult::total_rows_skipped() const {
  std::size_t s = 0;
  for (const auto& st : stats) s += st.rows_skipped;
  return s;
}

std::size_t GBResult::total_zero_reductions() const {
  std::size_t s = 0;
  for (const auto& st : stats) s += st.zero_reductions;
  return s;
}

namespace {

void validate_generators(const std::vector<ModuleElement>& F, const std::vector<int>& degrees) {
  if (F.empty()) throw ShapeError("no generators");
  if (F.size() != degrees.size()) throw DimensionError("one degree per generator expected");
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].nvars() != F[0].nvars() || !(F[i].field() == F[0].field()))
      throw DimensionError("generators over different rings");
    if (!F[i].is_homogeneous()) throw ShapeError("generator " + std::to_string(i + 1) + " is not homogeneous");
    if (degrees[i] < 0) throw ShapeError("negative generator degree");
    if (!F[i].is_zero() && F[i].degree() != degrees[i])
      throw ShapeError("declared degree of generator " + std::to_string(i + 1) + " is wrong");
  }
}

struct GenState {
  std::vector<std::uint8_t> crit;
  std::vector<int> pivot_of_tau;
};

ModuleElement row_to_element(const std::vector<Coeff>& row, const DegreeLayout& L, int s, int nvars,
                             const PrimeField& field) {
  ModuleElement v(nvars, field);
  const std::size_t N = L.size();
  std::vector<Polynomial> comps(static_cast<std::size_t>(s), Polynomial(nvars, field));
  for (std::size_t c = 0; c < row.size(); ++c)
    if (row[c] != 0) comps[c / N].add_term(L.monomial(c % N), row[c]);
  for (int b = 0; b < s; ++b) v.add(BasisIndex::free(s - b), comps[static_cast<std::size_t>(b)]);
  return v;
}

// Writes tau*f into a dense row over the degree-d columns.
void expand_product(const Monomial& tau, const ModuleElement& f, const DegreeLayout& L, int s,
                    std::vector<Coeff>& row) {
  const std::size_t N = L.size();
  for (const auto& [idx, poly] : f.components()) {
    const auto block = static_cast<std::size_t>(s - idx.free_index());
    for (const auto& [m, c] : poly.terms()) {
      const int k = L.index_of(tau * m);
      DETGB_CHECK(k >= 0, "product monomial outside the degree layout");
      row[block * N + static_cast<std::size_t>(k)] = c;
    }
  }
}

GBResult run(const std::vector<ModuleElement>& Fin, const std::vector<int>& degin, int D,
             const SyzygySignatureSet* S, const SigGBOptions& opts, bool lazard) {
  validate_generators(Fin, degin);
  GBResult res;
  res.degree_bound = D;
  res.nvars = Fin[0].nvars();
  res.field = Fin[0].field();
  const int n = res.nvars;
  const int t = static_cast<int>(Fin.size());
  const int s = free_rank(Fin);

  res.order.resize(Fin.size());
  std::iota(res.order.begin(), res.order.end(), 0);
  std::stable_sort(res.order.begin(), res.order.end(), [&](int a, int b) { return degin[static_cast<std::size_t>(a)] < degin[static_cast<std::size_t>(b)]; });
  std::vector<const ModuleElement*> gens;
  for (int k : res.order) {
    gens.push_back(&Fin[static_cast<std::size_t>(k)]);
    res.degrees.push_back(degin[static_cast<std::size_t>(k)]);
  }
  const int dmin = res.degrees.front();
  if (D < dmin) {
    res.warnings.push_back("degree bound " + std::to_string(D) + " is below every generator degree");
    return res;
  }

  MonomialTables tables(n);
  // Criterion seeds from S, bucketed by sorted position and signature degree.
  std::vector<std::vector<std::vector<int>>> seeds(static_cast<std::size_t>(t));
  if (S != nullptr && !lazard) {
    for (int k = 0; k < t; ++k) {
      auto& sk = seeds[static_cast<std::size_t>(k)];
      const int top = D - res.degrees[static_cast<std::size_t>(k)];
      if (top < 0) continue;
      sk.resize(static_cast<std::size_t>(top) + 1);
      for (const auto& tau : S->at(res.order[static_cast<std::size_t>(k)] + 1)) {
        if (tau.nvars() != n) throw DimensionError("syzygy signature over the wrong ring");
        if (tau.degree() > top) continue;
        sk[static_cast<std::size_t>(tau.degree())].push_back(tables.layout(tau.degree()).index_of(tau));
      }
    }
  }

  std::vector<GenState> prev_states(static_cast<std::size_t>(t));
  std::vector<std::vector<int>> lead_pos_by_degree(static_cast<std::size_t>(D) + 1);
  std::unique_ptr<SignatureEchelon> prev_ech;

  for (int d = dmin; d <= D; ++d) {
    const DegreeLayout& L = tables.layout(d);
    const std::size_t N = L.size();
    const std::size_t ncols = static_cast<std::size_t>(s) * N;
    auto ech = std::make_unique<SignatureEchelon>(ncols, res.field);
    std::vector<int> lead_pos(ncols, -1);
    RowStats st;
    st.d = d;
    std::vector<GenState> cur_states(static_cast<std::size_t>(t));
    std::vector<Coeff> row(ncols);

    for (int k = 0; k < t; ++k) {
      const int delta = d - res.degrees[static_cast<std::size_t>(k)];
      if (delta < 0) continue;
      const DegreeLayout& Ld = tables.layout(delta);
      const std::size_t Nd = Ld.size();
      GenState gs;
      gs.crit.assign(Nd, 0);
      gs.pivot_of_tau.assign(Nd, -1);
      const GenState& prev = prev_states[static_cast<std::size_t>(k)];

      if (!lazard) {
        const auto& sk = seeds[static_cast<std::size_t>(k)];
        if (static_cast<std::size_t>(delta) < sk.size())
          for (int idx : sk[static_cast<std::size_t>(delta)]) gs.crit[static_cast<std::size_t>(idx)] = 1;
        if (delta > 0) {
          DETGB_CHECK(prev.crit.size() == tables.layout(delta - 1).size(), "missing previous degree state");
          for (std::size_t idx = 0; idx < Nd; ++idx) {
            if (gs.crit[idx]) continue;
            for (int j = 0; j < n; ++j) {
              const int pidx = Ld.div_var(idx, j);
              if (pidx >= 0 && prev.crit[static_cast<std::size_t>(pidx)]) {
                gs.crit[idx] = 1;
                break;
              }
            }
          }
        }
        if (opts.f5_criterion && s == 1 && k > 0 && delta >= dmin) {
          const std::vector<int>& lp = delta == d ? lead_pos : lead_pos_by_degree[static_cast<std::size_t>(delta)];
          for (std::size_t idx = 0; idx < Nd; ++idx) {
            const int g = lp[idx];
            if (g >= 0 && g < k) gs.crit[idx] = 1;
          }
        }
      }

      for (std::size_t r = Nd; r-- > 0;) {
        const Monomial& tau = Ld.monomial(r);
        if (!lazard && gs.crit[r]) {
          ++st.rows_skipped;
          if (opts.record_skipped) res.skipped.push_back({tau, res.order[static_cast<std::size_t>(k)]});
          continue;
        }
        std::fill(row.begin(), row.end(), 0);
        if (lazard || delta == 0) {
          expand_product(tau, *gens[static_cast<std::size_t>(k)], L, s, row);
        } else {
          // x_j times the reduced row of tau / x_j from the previous degree.
          const int jv = tau.max_var();
          const int parent = Ld.div_var(r, jv);
          const int pid = prev.pivot_of_tau[static_cast<std::size_t>(parent)];
          DETGB_CHECK(pid >= 0, "parent row of a candidate was never reduced");
          const DegreeLayout& Lp = tables.layout(d - 1);
          const std::size_t Np = Lp.size();
          const std::size_t lead = prev_ech->lead(pid);
          const auto tail = prev_ech->tail(pid);
          for (std::size_t o = 0; o < tail.size(); ++o) {
            if (tail[o] == 0) continue;
            const std::size_t c = lead + o;
            const std::size_t block = c / Np;
            row[block * N + static_cast<std::size_t>(Lp.times_var(c % Np, jv))] = tail[o];
          }
        }
        ++st.rows_built;
        const int lc = ech->insert(row);
        if (lc < 0) {
          ++st.zero_reductions;
          gs.crit[r] = 1;
          res.zero_signatures.push_back({tau, res.order[static_cast<std::size_t>(k)]});
        } else {
          lead_pos[static_cast<std::size_t>(lc)] = k;
          gs.pivot_of_tau[r] = ech->pivot_at(static_cast<std::size_t>(lc));
        }
      }
      cur_states[static_cast<std::size_t>(k)] = std::move(gs);
    }
    st.rank = ech->rank();
    res.stats.push_back(st);

    // Minimal leading monomials per prefix of the generator sequence.
    const std::vector<int>* lprev = d - 1 >= dmin ? &lead_pos_by_degree[static_cast<std::size_t>(d - 1)] : nullptr;
    const std::size_t Np = d > 0 ? tables.layout(d - 1).size() : 0;
    for (std::size_t col = 0; col < ncols; ++col) {
      const int j = lead_pos[col];
      if (j < 0) continue;
      const std::size_t block = col / N;
      const std::size_t mi = col % N;
      int until = t;
      if (lprev != nullptr)
        for (int v = 0; v < n; ++v) {
          const int pm = L.div_var(mi, v);
          if (pm < 0) continue;
          const int lp = (*lprev)[block * Np + static_cast<std::size_t>(pm)];
          if (lp >= 0) until = std::min(until, lp);
        }
      if (j + 1 > until) continue;
      res.prefix_leads.push_back({{L.monomial(mi), BasisIndex::free(s - static_cast<int>(block))}, j, until});
      if (until == t && opts.collect_basis)
        res.basis.push_back(row_to_element(ech->fully_reduced_row(ech->pivot_at(col)), L, s, n, res.field));
    }

    lead_pos_by_degree[static_cast<std::size_t>(d)] = std::move(lead_pos);
    prev_states = std::move(cur_states);
    prev_ech = std::move(ech);
  }
  return res;
}

}  // namespace

GBResult sig_gb(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int D,
                const SyzygySignatureSet& S, const SigGBOptions& opts) {
  return run(F, degrees, D, &S, opts, false);
}

GBResult sig_gb(const std::vector<Polynomial>& F, int D, const SyzygySignatureSet& S, const SigGBOptions& opts) {
  const auto M = as_module_elements(F);
  return run(M, generator_degrees(M), D, &S, opts, false);
}

GBResult lazard_gb(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int D,
                   const SigGBOptions& opts) {
  return run(F, degrees, D, nullptr, opts, true);
}

GBResult lazard_gb(const std::vector<Polynomial>& F, int D, const SigGBOptions& opts) {
  const auto M = as_module_elements(F);
  return run(M, generator_degrees(M), D, nullptr, opts, true);
}

bool is_groebner_up_to(const std::vector<ModuleElement>& G, const std::vector<ModuleElement>& gens, int D) {
  if (gens.empty()) throw ShapeError("no generators");
  std::vector<ModuleElement> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  for (const auto& g : G)
    if (g.is_zero() || !g.is_homogeneous()) return false;
  if (nz.empty()) return true;
  const auto degs = generator_degrees(nz);
  const int n = nz[0].nvars();
  const int s = std::max(free_rank(nz), G.empty() ? 1 : free_rank(G));
  MonomialTables tables(n);
  std::vector<ModuleMonomial> leads;
  for (const auto& g : G) leads.push_back(g.leading_monomial());

  for (int d = 0; d <= D; ++d) {
    const DegreeLayout& L = tables.layout(d);
    const std::size_t N = L.size();
    SignatureEchelon ech(static_cast<std::size_t>(s) * N, nz[0].field());
    std::vector<Coeff> row(ech.ncols());
    for (std::size_t i = 0; i < nz.size(); ++i) {
      const int delta = d - degs[i];
      if (delta < 0) continue;
      for (const auto& tau : tables.layout(delta).monomials()) {
        std::fill(row.begin(), row.end(), 0);
        expand_product(tau, nz[i], L, s, row);
        ech.insert(row);
      }
    }
    for (std::size_t col = 0; col < ech.ncols(); ++col) {
      if (!ech.has_pivot(col)) continue;
      const ModuleMonomial lm{L.monomial(col % N), BasisIndex::free(s - static_cast<int>(col / N))};
      const bool covered = std::any_of(leads.begin(), leads.end(), [&](const ModuleMonomial& g) {
        return g.index == lm.index && g.mono.divides(lm.mono);
      });
      if (!covered) return false;
    }
    for (const auto& g : G) {
      if (g.degree() != d) continue;
      std::fill(row.begin(), row.end(), 0);
      expand_product(Monomial(n), g, L, s, row);
      ech.reduce(row);
      if (std::any_of(row.begin(), row.end(), [](Coeff c) { return c != 0; })) return false;
    }
  }
  return true;
}

bool is_groebner_up_to(const std::vector<Polynomial>& G, const std::vector<Polynomial>& gens, int D) {
  return is_groebner_up_to(as_module_elements(G), as_module_elements(gens), D);
}

std::string row_stats_csv(const GBResult& r) {
  std::ostringstream os;
  os << "d,rows_built,rows_skipped,zero_reductions,rank\n";
  for (const auto& st : r.stats)
    os << st.d << ',' << st.rows_built << ',' << st.rows_skipped << ',' << st.zero_reductions << ',' << st.rank << '\n';
  return os.str();
}

}  // namespace detgb
