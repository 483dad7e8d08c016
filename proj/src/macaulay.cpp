#include "detgb/macaulay.hpp"

#include <algorithm>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

DegreeLayout::DegreeLayout(int nvars, int d) : n_(nvars), d_(d), monos_(enumerate_monomials(nvars, d)) {
  index_.reserve(monos_.size());
  for (std::size_t k = 0; k < monos_.size(); ++k) index_.emplace(monos_[k], static_cast<int>(k));
}

int DegreeLayout::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

MonomialTables::MonomialTables(int nvars) : n_(nvars) {
  if (nvars < 1) throw ShapeError("need at least one variable");
}

const DegreeLayout& MonomialTables::layout(int d) {
  if (d < 0) throw ShapeError("negative degree");
  while (static_cast<int>(layouts_.size()) <= d) {
    const int k = static_cast<int>(layouts_.size());
    layouts_.emplace_back(n_, k);
    if (k == 0) continue;
    DegreeLayout& prev = layouts_[layouts_.size() - 2];
    DegreeLayout& cur = layouts_.back();
    const auto n = static_cast<std::size_t>(n_);
    prev.up_.assign(prev.size() * n, -1);
    cur.down_.assign(cur.size() * n, -1);
    for (std::size_t a = 0; a < prev.size(); ++a) {
      for (int j = 0; j < n_; ++j) {
        const int b = cur.index_of(prev.monos_[a].times_var(j));
        prev.up_[a * n + static_cast<std::size_t>(j)] = b;
        cur.down_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(j)] = static_cast<int>(a);
      }
    }
  }
  return layouts_[static_cast<std::size_t>(d)];
}

std::string Signature::to_string() const { return tau.to_string() + "*e(" + std::to_string(gen + 1) + ")"; }

std::strong_ordering sig_cmp(const Signature& a, const Signature& b) {
  if (a.gen != b.gen) return a.gen <=> b.gen;
  return grevlex_cmp(a.tau, b.tau);
}

SignatureEchelon::SignatureEchelon(std::size_t ncols, const PrimeField& field)
    : ncols_(ncols), field_(field), pivot_of_col_(ncols, -1), acc_(ncols) {}

void SignatureEchelon::reduce_acc(std::vector<std::uint64_t>& acc, std::size_t start, int skip) const {
  const std::uint64_t p = field_.modulus();
  const std::uint64_t budget = field_.accumulation_budget();
  std::uint64_t used = 0;
  for (std::size_t c = start; c < ncols_; ++c) {
    if (acc[c] == 0) continue;
    const std::uint64_t v = acc[c] % p;
    acc[c] = v;
    const int id = pivot_of_col_[c];
    if (v == 0 || id < 0 || id == skip) continue;
    if (used >= budget) {
      for (std::size_t k = c + 1; k < ncols_; ++k) acc[k] %= p;
      used = 0;
    }
    const std::uint64_t f = p - v;
    const auto& piv = tails_[static_cast<std::size_t>(id)];
    std::uint64_t* out = acc.data() + c;
    out[0] = 0;
    const std::size_t len = piv.size();
    for (std::size_t k = 1; k < len; ++k) out[k] += f * piv[k];
    ++used;
  }
}

void SignatureEchelon::reduce(std::vector<Coeff>& row) const {
  if (row.size() != ncols_) throw DimensionError("row length does not match the echelon width");
  std::copy(row.begin(), row.end(), acc_.begin());
  auto first = std::find_if(row.begin(), row.end(), [](Coeff c) { return c != 0; });
  reduce_acc(acc_, static_cast<std::size_t>(first - row.begin()), -1);
  for (std::size_t k = 0; k < ncols_; ++k) row[k] = static_cast<Coeff>(acc_[k]);
}

int SignatureEchelon::insert(std::vector<Coeff>& row) {
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](Coeff c) { return c != 0; });
  if (it == row.end()) return -1;
  const auto lead = static_cast<std::size_t>(it - row.begin());
  const Coeff inv = field_.inv(row[lead]);
  std::vector<Coeff> tail(ncols_ - lead);
  for (std::size_t k = lead; k < ncols_; ++k) {
    row[k] = field_.mul(row[k], inv);
    tail[k - lead] = row[k];
  }
  const int id = static_cast<int>(leads_.size());
  DETGB_CHECK(pivot_of_col_[lead] < 0, "reduced row kept a pivot column");
  pivot_of_col_[lead] = id;
  leads_.push_back(lead);
  tails_.push_back(std::move(tail));
  return static_cast<int>(lead);
}

std::vector<Coeff> SignatureEchelon::row(int id) const {
  std::vector<Coeff> r(ncols_, 0);
  const auto lead = leads_[static_cast<std::size_t>(id)];
  const auto& t = tails_[static_cast<std::size_t>(id)];
  std::copy(t.begin(), t.end(), r.begin() + static_cast<std::ptrdiff_t>(lead));
  return r;
}

std::vector<Coeff> SignatureEchelon::fully_reduced_row(int id) const {
  auto r = row(id);
  std::copy(r.begin(), r.end(), acc_.begin());
  reduce_acc(acc_, leads_[static_cast<std::size_t>(id)] + 1, id);
  for (std::size_t k = 0; k < ncols_; ++k) r[k] = static_cast<Coeff>(acc_[k]);
  return r;
}

int MacaulayMatrix::column_of(const ModuleMonomial& m) const {
  auto it = column_index_.find(m);
  return it == column_index_.end() ? -1 : it->second;
}

std::string MacaulayMatrix::dump() const {
  std::ostringstream os;
  for (const auto& r : rows_) {
    os << r.sig.to_string() << " ;";
    for (std::size_t c = 0; c < r.coeffs.size(); ++c)
      if (r.coeffs[c] != 0) os << ' ' << columns_[c].to_string() << ':' << r.coeffs[c];
    os << '\n';
  }
  return os.str();
}

int free_rank(const std::vector<ModuleElement>& F) {
  int s = 1;
  for (const auto& f : F)
    for (const auto& [idx, poly] : f.components()) {
      if (idx.kind() != BasisIndex::Kind::Free) throw TypeError("generators must live in a free module");
      s = std::max(s, idx.free_index());
    }
  return s;
}

std::vector<int> generator_degrees(const std::vector<ModuleElement>& F) {
  std::vector<int> deg;
  deg.reserve(F.size());
  for (const auto& f : F) {
    if (f.is_zero()) throw ShapeError("zero generator has no degree");
    if (!f.is_homogeneous()) throw ShapeError("generator is not homogeneous");
    deg.push_back(f.degree());
  }
  return deg;
}

MacaulayMatrix build_macaulay(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int d) {
  if (F.empty()) throw ShapeError("no generators");
  if (F.size() != degrees.size()) throw DimensionError("one degree per generator expected");
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (!F[i].is_homogeneous()) throw ShapeError("generator is not homogeneous");
    if (!F[i].is_zero() && F[i].degree() != degrees[i]) throw ShapeError("declared generator degree is wrong");
    if (F[i].nvars() != F[0].nvars()) throw DimensionError("generators over different rings");
  }
  MacaulayMatrix M;
  M.degree_ = d;
  M.nvars_ = F[0].nvars();
  M.npositions_ = free_rank(F);
  M.field_ = F[0].field();
  M.gen_degrees_ = degrees;
  if (d < 0) return M;

  const auto monos = enumerate_monomials(M.nvars_, d);
  for (int pos = M.npositions_; pos >= 1; --pos)
    for (const auto& m : monos) M.columns_.push_back({m, BasisIndex::free(pos)});
  for (std::size_t c = 0; c < M.columns_.size(); ++c) M.column_index_.emplace(M.columns_[c], static_cast<int>(c));

  for (std::size_t i = 0; i < F.size(); ++i) {
    const int delta = d - degrees[i];
    if (delta < 0) continue;
    auto taus = enumerate_monomials(M.nvars_, delta);
    for (auto it = taus.rbegin(); it != taus.rend(); ++it) {
      MacaulayRow row{{*it, static_cast<int>(i)}, std::vector<Coeff>(M.columns_.size(), 0), false};
      for (const auto& [idx, poly] : F[i].components())
        for (const auto& [m, c] : poly.terms()) {
          const int col = M.column_of({*it * m, idx});
          DETGB_CHECK(col >= 0, "product monomial outside the column set");
          row.coeffs[static_cast<std::size_t>(col)] = c;
        }
      M.rows_.push_back(std::move(row));
    }
  }
  return M;
}

MacaulayMatrix build_macaulay(const std::vector<ModuleElement>& F, int d) {
  return build_macaulay(F, generator_degrees(F), d);
}

MacaulayMatrix echelonize_valid(const MacaulayMatrix& M) {
  MacaulayMatrix E = M;
  SignatureEchelon ech(E.columns_.size(), E.field_);
  for (std::size_t r = 0; r < E.rows_.size(); ++r) {
    if (r > 0)
      DETGB_CHECK(sig_cmp(E.rows_[r - 1].sig, E.rows_[r].sig) < 0, "rows are not in increasing signature order");
    auto& row = E.rows_[r];
    row.zero = ech.insert(row.coeffs) < 0;
  }
  E.echelonized_ = true;
  return E;
}

std::size_t rank(const MacaulayMatrix& M) {
  if (!M.echelonized()) return rank(echelonize_valid(M));
  return static_cast<std::size_t>(std::count_if(M.rows().begin(), M.rows().end(), [](const MacaulayRow& r) { return !r.zero; }));
}

std::vector<std::pair<Signature, ModuleElement>> rows_as_elements(const MacaulayMatrix& M) {
  std::vector<std::pair<Signature, ModuleElement>> out;
  out.reserve(M.rows().size());
  for (const auto& r : M.rows()) {
    ModuleElement v(M.nvars(), M.field());
    for (std::size_t c = 0; c < r.coeffs.size(); ++c)
      if (r.coeffs[c] != 0) v.add(M.columns()[c].index, Polynomial::term(M.columns()[c].mono, r.coeffs[c], M.field()));
    out.emplace_back(r.sig, std::move(v));
  }
  return out;
}

std::pair<std::size_t, std::size_t> macaulay_rank(const std::vector<ModuleElement>& F, const std::vector<int>& degrees,
                                                  int d) {
  const auto M = build_macaulay(F, degrees, d);
  return {rank(M), M.rows().size()};
}

std::vector<ModuleElement> as_module_elements(const std::vector<Polynomial>& F) {
  std::vector<ModuleElement> out;
  out.reserve(F.size());
  for (const auto& f : F) {
    ModuleElement v(f.nvars(), f.field());
    v.add(BasisIndex::free(1), f);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detgb
