#pragma once

// Reference computations kept apart from the library's own kernels: plain
// Gaussian elimination on dense uint64 rows, an independent monomial
// enumeration and grevlex comparison, and a brute-force syzygy check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "detgb/polynomial.hpp"

namespace oracle {

using Row = std::vector<std::uint64_t>;
using Exps = std::vector<int>;

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// True when a is larger than b in grevlex.
inline bool grevlex_greater(const Exps& a, const Exps& b) {
  int da = 0, db = 0;
  for (int v : a) da += v;
  for (int v : b) db += v;
  if (da != db) return da > db;
  for (std::size_t k = a.size(); k-- > 0;)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

inline void exps_rec(int n, int d, std::size_t at, Exps& cur, std::vector<Exps>& out) {
  if (at + 1 == static_cast<std::size_t>(n)) {
    cur[at] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[at] = e;
    exps_rec(n, d - e, at + 1, cur, out);
  }
  cur[at] = 0;
}

// Degree-d exponent vectors, decreasing in grevlex.
inline std::vector<Exps> monomials(int n, int d) {
  std::vector<Exps> out;
  if (d < 0) return out;
  Exps cur(static_cast<std::size_t>(n), 0);
  exps_rec(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), grevlex_greater);
  return out;
}

inline Exps exps_of(const detgb::Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

inline Exps add(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// Rank by straightforward elimination; rows are consumed.
inline std::size_t rank(std::vector<Row> M, std::uint64_t p) {
  if (M.empty()) return 0;
  const std::size_t nc = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] % p == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[r], M[piv]);
    const std::uint64_t iv = inv_mod(M[r][c] % p, p);
    for (auto& v : M[r]) v = v % p * iv % p;
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r) continue;
      const std::uint64_t f = M[i][c] % p;
      if (!f) continue;
      for (std::size_t k = 0; k < nc; ++k) M[i][k] = (M[i][k] % p + (p - f) * M[r][k]) % p;
    }
    ++r;
  }
  return r;
}

// Pivot columns of the reduced row echelon form (columns scanned left to
// right, so with columns sorted decreasing these are the leading terms of the
// row space).
inline std::vector<std::size_t> pivot_columns(std::vector<Row> M, std::uint64_t p) {
  std::vector<std::size_t> out;
  if (M.empty()) return out;
  const std::size_t nc = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] % p == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[r], M[piv]);
    const std::uint64_t iv = inv_mod(M[r][c] % p, p);
    for (auto& v : M[r]) v = v % p * iv % p;
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      const std::uint64_t f = M[i][c] % p;
      if (!f) continue;
      for (std::size_t k = c; k < nc; ++k) M[i][k] = (M[i][k] % p + (p - f) * M[r][k]) % p;
    }
    out.push_back(c);
    ++r;
  }
  return out;
}

// Gauss-Jordan basis grown one row at a time.
struct Incremental {
  explicit Incremental(std::uint64_t prime) : p(prime) {}

  // Returns false if the row is a combination of the rows already added.
  bool add(Row row) {
    for (auto& v : row) v %= p;
    for (const auto& [c, b] : basis) {
      const std::uint64_t f = row[c];
      if (!f) continue;
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = (row[k] + (p - f) * b[k]) % p;
    }
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) return false;
    const std::uint64_t iv = inv_mod(row[c], p);
    for (auto& v : row) v = v * iv % p;
    for (auto& entry : basis) {
      auto& b = entry.second;
      const std::uint64_t f = b[c];
      if (!f) continue;
      for (std::size_t k = 0; k < b.size(); ++k) b[k] = (b[k] + (p - f) * row[k]) % p;
    }
    basis.emplace_back(c, std::move(row));
    return true;
  }

  std::uint64_t p;
  std::vector<std::pair<std::size_t, Row>> basis;
};

struct Macaulay {
  std::vector<Exps> cols;
  std::vector<Row> rows;
  // Row labels: (generator index, multiplier exponents).
  std::vector<std::pair<std::size_t, Exps>> labels;
};

// All degree-d multiples of the generators; zero generators and those above
// degree d contribute nothing.
inline Macaulay macaulay(const std::vector<detgb::Polynomial>& F, int n, int d) {
  Macaulay M;
  M.cols = monomials(n, d);
  std::map<Exps, std::size_t> idx;
  for (std::size_t k = 0; k < M.cols.size(); ++k) idx[M.cols[k]] = k;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].is_zero() || F[i].degree() > d) continue;
    for (const auto& t : monomials(n, d - F[i].degree())) {
      Row row(M.cols.size(), 0);
      for (const auto& [m, c] : F[i].terms()) row[idx.at(add(exps_of(m), t))] = c;
      M.rows.push_back(std::move(row));
      M.labels.emplace_back(i, t);
    }
  }
  return M;
}

inline std::size_t macaulay_rank(const std::vector<detgb::Polynomial>& F, int n, int d, std::uint64_t p) {
  return rank(macaulay(F, n, d).rows, p);
}

// Leading monomials of the ideal in degree d.
inline std::set<Exps> leading_terms(const std::vector<detgb::Polynomial>& F, int n, int d, std::uint64_t p) {
  auto M = macaulay(F, n, d);
  std::set<Exps> out;
  for (auto c : pivot_columns(M.rows, p)) out.insert(M.cols[c]);
  return out;
}

// Minimal generators of the leading-term ideal up to degree D.
inline std::set<Exps> minimal_leads(const std::vector<detgb::Polynomial>& F, int n, int D, std::uint64_t p) {
  std::set<Exps> out;
  for (int d = 0; d <= D; ++d)
    for (const auto& m : leading_terms(F, n, d, p)) {
      const bool covered = std::any_of(out.begin(), out.end(), [&](const Exps& g) { return divides(g, m); });
      if (!covered) out.insert(m);
    }
  return out;
}

// Leading module monomials (position, multiplier) of the degree-d syzygies
// of F under position-over-term with later positions larger. A label is a
// leading term exactly when its row is a combination of rows with smaller
// labels.
inline std::set<std::pair<std::size_t, Exps>> syzygy_leads(const std::vector<detgb::Polynomial>& F, int n, int d,
                                                           std::uint64_t p) {
  auto M = macaulay(F, n, d);
  std::vector<std::size_t> order(M.rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (M.labels[a].first != M.labels[b].first) return M.labels[a].first < M.labels[b].first;
    return grevlex_greater(M.labels[b].second, M.labels[a].second);
  });
  std::set<std::pair<std::size_t, Exps>> out;
  Incremental inc(p);
  for (auto k : order)
    if (!inc.add(M.rows[k])) out.insert(M.labels[k]);
  return out;
}

}  // namespace oracle
