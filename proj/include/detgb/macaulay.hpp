#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detgb/field.hpp"
#include "detgb/monomial.hpp"
#include "detgb/polynomial.hpp"

namespace detgb {

/// Monomials of one degree in decreasing grevlex order, with links to the
/// neighbouring degrees (multiplication and exact division by a variable).
class DegreeLayout {
 public:
  DegreeLayout(int nvars, int d);

  int nvars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return monos_.size(); }
  const Monomial& monomial(std::size_t k) const { return monos_[k]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  /// Position of m in this layout, or -1.
  int index_of(const Monomial& m) const;

  /// Index of monomial(k) * x_j in the layout of degree d+1.
  int times_var(std::size_t k, int j) const { return up_[k * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
  /// Index of monomial(k) / x_j in the layout of degree d-1, or -1.
  int div_var(std::size_t k, int j) const { return down_[k * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

 private:
  friend class MonomialTables;

  int n_;
  int d_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
  std::vector<int> up_;
  std::vector<int> down_;
};

/// Lazily built layouts for degrees 0, 1, 2, ... in a fixed ring.
class MonomialTables {
 public:
  explicit MonomialTables(int nvars);
  int nvars() const { return n_; }
  /// References stay valid for the lifetime of the tables.
  const DegreeLayout& layout(int d);

 private:
  int n_;
  std::deque<DegreeLayout> layouts_;
};

/// Label tau*e_gen of a Macaulay row; gen is 0-based.
struct Signature {
  Monomial tau;
  int gen = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
  std::string to_string() const;
};

/// Position first, then grevlex on tau.
std::strong_ordering sig_cmp(const Signature& a, const Signature& b);

/// Row echelon structure over Z/pZ built one row at a time.
///
/// Each inserted row is fully reduced against the pivots already present,
/// then made monic. Callers insert rows in increasing signature order, so
/// every elimination adds a smaller-signature row to a larger one.
class SignatureEchelon {
 public:
  SignatureEchelon(std::size_t ncols, const PrimeField& field);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return leads_.size(); }
  const PrimeField& field() const { return field_; }

  /// Reduces `row` in place; if it survives, stores it as a pivot and
  /// returns its lead column, else returns -1.
  int insert(std::vector<Coeff>& row);
  /// Full reduction against the current pivots, without inserting.
  void reduce(std::vector<Coeff>& row) const;

  bool has_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }
  /// Pivot id at `col`, or -1.
  int pivot_at(std::size_t col) const { return pivot_of_col_[col]; }
  std::size_t lead(int id) const { return leads_[static_cast<std::size_t>(id)]; }
  /// Entries of a pivot from its lead column to the end; the first is 1.
  std::span<const Coeff> tail(int id) const { return tails_[static_cast<std::size_t>(id)]; }
  std::vector<Coeff> row(int id) const;
  /// Reduces pivot `id` against every other pivot (back substitution).
  std::vector<Coeff> fully_reduced_row(int id) const;

 private:
  void reduce_acc(std::vector<std::uint64_t>& acc, std::size_t start, int skip) const;

  std::size_t ncols_;
  PrimeField field_;
  std::vector<int> pivot_of_col_;
  std::vector<std::size_t> leads_;
  std::vector<std::vector<Coeff>> tails_;
  mutable std::vector<std::uint64_t> acc_;
};

struct MacaulayRow {
  Signature sig;
  std::vector<Coeff> coeffs;
  bool zero = false;
};

/// Degree-d Macaulay matrix: rows tau*f_i labelled by signatures, columns
/// the degree-d module monomials in decreasing POT order.
class MacaulayMatrix {
 public:
  int degree() const { return degree_; }
  int nvars() const { return nvars_; }
  int npositions() const { return npositions_; }
  const PrimeField& field() const { return field_; }
  const std::vector<int>& generator_degrees() const { return gen_degrees_; }
  const std::vector<ModuleMonomial>& columns() const { return columns_; }
  const std::vector<MacaulayRow>& rows() const { return rows_; }
  bool echelonized() const { return echelonized_; }
  /// Column of a module monomial, or -1.
  int column_of(const ModuleMonomial& m) const;

  /// One row per line: `signature ; col:coeff ...`.
  std::string dump() const;

 private:
  friend MacaulayMatrix build_macaulay(const std::vector<ModuleElement>&, const std::vector<int>&, int);
  friend MacaulayMatrix echelonize_valid(const MacaulayMatrix&);

  int degree_ = 0;
  int nvars_ = 0;
  int npositions_ = 1;
  PrimeField field_;
  std::vector<int> gen_degrees_;
  std::vector<ModuleMonomial> columns_;
  std::unordered_map<ModuleMonomial, int, ModuleMonomialHash> column_index_;
  std::vector<MacaulayRow> rows_;
  bool echelonized_ = false;
};

/// Number of free-module positions used by F (largest e_i index).
int free_rank(const std::vector<ModuleElement>& F);
/// Checks homogeneity and returns the degree of each generator.
std::vector<int> generator_degrees(const std::vector<ModuleElement>& F);

/// Rows sorted by increasing signature. Generators given with explicit
/// degrees may be zero; they contribute zero rows.
MacaulayMatrix build_macaulay(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int d);
MacaulayMatrix build_macaulay(const std::vector<ModuleElement>& F, int d);

MacaulayMatrix echelonize_valid(const MacaulayMatrix& M);
std::size_t rank(const MacaulayMatrix& M);
std::vector<std::pair<Signature, ModuleElement>> rows_as_elements(const MacaulayMatrix& M);

/// Rank of the degree-d Macaulay matrix and its number of rows.
std::pair<std::size_t, std::size_t> macaulay_rank(const std::vector<ModuleElement>& F, const std::vector<int>& degrees, int d);

std::vector<ModuleElement> as_module_elements(const std::vector<Polynomial>& F);

}  // namespace detgb
