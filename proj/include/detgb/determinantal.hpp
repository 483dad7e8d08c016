#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "detgb/polynomial.hpp"
#include "detgb/sig_gb.hpp"

namespace detgb {

/// r-subset of columns (1-based, strictly increasing) with its rank in the
/// ascending lexicographic enumeration of all r-subsets of {1..q}.
struct MinorIndex {
  std::vector<int> cols;
  std::size_t ordinal = 0;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

std::size_t subset_ordinal(std::span<const int> cols, int q);
std::vector<int> subset_from_ordinal(std::size_t ordinal, int r, int q);
/// All r-subsets of {1..q} in ascending lex order.
std::vector<std::vector<int>> lex_subsets(int q, int r);
MinorIndex minor_index(std::vector<int> cols, int q);

/// Rows g, f_1, ..., f_p; entry (i, j) is the derivative along x_j.
PolyMatrix jacobian(const Polynomial& g, const std::vector<Polynomial>& F);

/// Determinant of the submatrix on the given 1-based rows and columns.
Polynomial minor(const PolyMatrix& A, std::span<const int> rows, std::span<const int> cols);
/// Maximal minors (rows 1..p) in ascending lex order of column tuples.
std::vector<Polynomial> maximal_minors(const PolyMatrix& A);
/// r-minors; for r < p ordered by column tuple, then row tuple.
std::vector<Polynomial> minors(const PolyMatrix& A, int r);

/// Image of e_i (x) (e_{c_1} ^ ... ^ e_{c_{p+1}}) under the first
/// Eagon-Northcott boundary, as an element over the wedge basis.
ModuleElement en_first_syzygy(const PolyMatrix& A, int dup_row, const std::vector<int>& cols);
/// Sum of component * maximal minor at its wedge position.
Polynomial evaluate_minors(const ModuleElement& v, const PolyMatrix& A);

/// LM(g) * e_T with g in a Groebner basis of the ideal J_k of the first k
/// columns and T a maximal-minor position with min(T) = k+1.
struct ENSyzygyTerm {
  Monomial lead;
  MinorIndex position;
  int k = 0;
};

/// Terms whose syzygy lives in total degree <= D.
std::vector<ENSyzygyTerm> en_syzygy_terms(const PolyMatrix& A, int D);
/// Same terms as signatures at free positions offset + ordinal + 1.
SyzygySignatureSet en_leading_terms(const PolyMatrix& A, int D, int gen_offset = 0);
/// Size of each degree layer of the submodule generated by the terms: the
/// number of module monomials m*e_T of multiplier degree delta (0..max_degree)
/// divisible by some term at position T.
std::map<int, std::size_t> layer_counts(const std::vector<ENSyzygyTerm>& terms, int nvars, int max_degree);

GBResult max_minors_sig_gb(const PolyMatrix& A, int D, bool use_en = true, const SigGBOptions& opts = {});

struct CritSystem {
  std::vector<Polynomial> F;
  Polynomial g;
  PolyMatrix jac;
  int d0 = 0;

  int p() const { return static_cast<int>(F.size()); }
  int nvars() const { return g.nvars(); }
  /// F followed by the maximal minors of jac.
  std::vector<Polynomial> generators() const;
  std::vector<int> generator_degrees() const;
};

/// Validates degrees and shape and builds the Jacobian.
CritSystem make_crit_system(const std::vector<Polynomial>& F, const Polynomial& g);
SyzygySignatureSet crit_syzygy_signatures(const CritSystem& sys, int D);
GBResult crit_gb(const std::vector<Polynomial>& F, const Polynomial& g, int D, bool use_en = true,
                 const SigGBOptions& opts = {});
GBResult crit_lazard_gb(const std::vector<Polynomial>& F, const Polynomial& g, int D, const SigGBOptions& opts = {});

struct DirectSumRow {
  int d = 0;
  std::size_t syz_all = 0;
  std::size_t syz_F = 0;
  std::size_t syz_minors = 0;
  /// Dimension of the product ideal <F> * I(minors) in degree d, the span
  /// of the cross Koszul syzygies f*e_m - m*e_f.
  std::size_t cross = 0;
  bool literal_sum = false;
  bool holds = false;
};

struct DirectSumReport {
  std::vector<DirectSumRow> rows;
  bool minors_vanish = false;
  bool holds() const;
  std::string to_string() const;
};

/// Compares syzygy dimensions of F, the Jacobian minors and their union.
DirectSumReport syzygy_direct_sum_check(const std::vector<Polynomial>& F, const Polynomial& g, int D);

}  // namespace detgb
