#pragma once

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "detgb/field.hpp"
#include "detgb/monomial.hpp"

namespace detgb {

/// Sparse polynomial over Z/pZ. Terms are kept in decreasing grevlex order
/// with no zero coefficients, so the first term is the leading one.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coeff, GrevlexGreater>;

  Polynomial() = default;
  Polynomial(int nvars, const PrimeField& field) : nvars_(nvars), field_(field) {}

  static Polynomial term(const Monomial& m, Coeff c, const PrimeField& field);

  int nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : terms_.begin()->first.degree(); }
  bool is_homogeneous() const;

  const Monomial& leading_monomial() const;
  Coeff leading_coeff() const;
  Coeff coeff(const Monomial& m) const;

  /// Adds c*m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, Coeff c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Text form `c*x1^a*x2^b + ...`; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;

  int nvars_ = 0;
  PrimeField field_;
  Terms terms_;
};

/// Parses `term (+|- term)*` with term = `[coeff][*]x1^e*x3...`, variables
/// x1..x<nvars>. Coefficients are reduced modulo the field prime.
Polynomial parse_polynomial(std::string_view text, int nvars, const PrimeField& field);

Polynomial partial_derivative(const Polynomial& f, int j);

/// Every monomial of degree d gets an independent uniform coefficient.
Polynomial random_homogeneous(int n, int d, const PrimeField& field, std::mt19937_64& rng);

/// Appends a variable h (grevlex-smallest) and pads every term to deg f.
Polynomial homogenize(const Polynomial& f);
/// Sets the last variable to 1.
Polynomial dehomogenize(const Polynomial& f);

/// Element of a free module with basis positions indexed by BasisIndex.
class ModuleElement {
 public:
  using Components = std::map<BasisIndex, Polynomial, BasisIndexLess>;

  ModuleElement() = default;
  ModuleElement(int nvars, const PrimeField& field) : nvars_(nvars), field_(field) {}
  /// f * e_i in the rank-one case.
  static ModuleElement from_polynomial(const Polynomial& f, const BasisIndex& index = BasisIndex::free(1));

  int nvars() const { return nvars_; }
  const PrimeField& field() const { return field_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  /// Common total degree of the components; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  ModuleMonomial leading_monomial() const;
  Polynomial component(const BasisIndex& index) const;

  void add(const BasisIndex& index, const Polynomial& f);

  std::string to_string() const;

 private:
  int nvars_ = 0;
  PrimeField field_;
  Components comps_;
};

/// p x q matrix of polynomials sharing one entry degree. Zero entries are
/// allowed and carry no degree.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, int entry_degree, std::vector<Polynomial> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int entry_degree() const { return entry_degree_; }
  int nvars() const { return entries_.front().nvars(); }
  const PrimeField& field() const { return entries_.front().field(); }
  /// 0-based access.
  const Polynomial& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j)];
  }
  const std::vector<Polynomial>& entries() const { return entries_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int entry_degree_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace detgb
