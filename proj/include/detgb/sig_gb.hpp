#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "detgb/macaulay.hpp"
#include "detgb/polynomial.hpp"

namespace detgb {

/// Leading module monomials of known syzygies. A query tau*e_i is a member
/// when some stored t*e_i with t | tau exists.
class SyzygySignatureSet {
 public:
  /// Position must be a free index e_i (1-based, input generator order).
  void insert(const ModuleMonomial& m);
  void insert(const Monomial& tau, int position) { insert({tau, BasisIndex::free(position)}); }

  bool contains(const Monomial& tau, int position) const;
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<ModuleMonomial>& elements() const { return elements_; }
  /// Stored monomials at one position.
  const std::vector<Monomial>& at(int position) const;

 private:
  std::vector<ModuleMonomial> elements_;
  std::unordered_set<ModuleMonomial, ModuleMonomialHash> seen_;
  std::map<int, std::vector<Monomial>> by_position_;
};

struct SigGBOptions {
  bool f5_criterion = true;
  /// Keep the signature of every skipped candidate row.
  bool record_skipped = false;
  /// Build the reduced basis polynomials (not only leading monomials).
  bool collect_basis = true;
};

struct RowStats {
  int d = 0;
  std::size_t rows_built = 0;
  std::size_t rows_skipped = 0;
  std::size_t zero_reductions = 0;
  std::size_t rank = 0;
};

/// A leading monomial that is a minimal generator of LM(<f_1..f_i>) for
/// every prefix length i in [gen+1, until]. Positions refer to the sorted
/// generator order.
struct PrefixLead {
  ModuleMonomial lm;
  int gen = 0;
  int until = 0;
};

struct GBResult {
  int degree_bound = 0;
  int nvars = 0;
  PrimeField field;
  /// order[k] is the input index of the generator processed k-th.
  std::vector<int> order;
  std::vector<int> degrees;
  /// Reduced basis of the whole ideal up to the degree bound.
  std::vector<ModuleElement> basis;
  std::vector<PrefixLead> prefix_leads;
  std::vector<RowStats> stats;
  /// Signatures use input generator indices (0-based).
  std::vector<Signature> zero_signatures;
  std::vector<Signature> skipped;
  std::vector<std::string> warnings;

  /// Minimal leading monomials of the whole ideal, sorted decreasing.
  std::vector<ModuleMonomial> leading_monomials() const;
  /// Minimal leading monomials of the ideal spanned by the first `count`
  /// processed generators.
  std::vector<ModuleMonomial> prefix_basis_leads(int count) const;
  std::size_t total_rows_built() const;
  std::size_t total_rows_skipped() const;
  std::size_t total_zero_reductions() const;
};

/// Matrix-F5 up to degree D. Candidate rows whose signature lies in the
/// criterion set (S, F5 criterion when the module has rank one, and
/// multiples of zero-reduction signatures) are never built.
GBResult sig_gb(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int D,
                const SyzygySignatureSet& S, const SigGBOptions& opts = {});
GBResult sig_gb(const std::vector<Polynomial>& F, int D, const SyzygySignatureSet& S = {},
                const SigGBOptions& opts = {});

/// Full Macaulay matrices in every degree, no criteria.
GBResult lazard_gb(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int D,
                   const SigGBOptions& opts = {});
GBResult lazard_gb(const std::vector<Polynomial>& F, int D, const SigGBOptions& opts = {});

/// True when every element of G lies in <gens> and LM(G) generates the
/// leading terms of <gens> in every degree up to D.
bool is_groebner_up_to(const std::vector<ModuleElement>& G, const std::vector<ModuleElement>& gens, int D);
bool is_groebner_up_to(const std::vector<Polynomial>& G, const std::vector<Polynomial>& gens, int D);

/// `d,rows_built,rows_skipped,zero_reductions,rank` with a header line.
std::string row_stats_csv(const GBResult& r);

/// Sorted set difference helpers for leading monomial comparison.
std::vector<ModuleMonomial> sorted_monomials(std::vector<ModuleMonomial> v);

}  // namespace detgb
