#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace detgb {

/// x^alpha over a fixed number of variables, with cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  /// The constant monomial 1 in `nvars` variables.
  explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<int> exps);

  static Monomial variable(int nvars, int j);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  Exponent operator[](int j) const { return exps_[static_cast<std::size_t>(j)]; }
  std::span<const Exponent> exponents() const { return exps_; }

  /// Index of the largest variable dividing this monomial, or -1 for 1.
  int max_var() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; requires other | this.
  Monomial operator/(const Monomial& other) const;
  Monomial times_var(int j) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Graded reverse lexicographic comparison. `greater` means a is larger.
std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// All monomials of degree d in n variables, strictly decreasing in grevlex.
std::vector<Monomial> enumerate_monomials(int n, int d);

/// Position of a module monomial: either a free-module index e_i or an
/// exterior basis element e_{i1} ^ ... ^ e_{ip}. Indices are 1-based.
class BasisIndex {
 public:
  enum class Kind { Free, Wedge };

  BasisIndex() = default;
  static BasisIndex free(int i);
  static BasisIndex wedge(std::vector<int> cols);

  Kind kind() const { return kind_; }
  std::span<const int> ids() const { return ids_; }
  int free_index() const { return ids_.front(); }

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Free;
  std::vector<int> ids_{1};
};

/// Position dominates; the lex-larger position is the larger one.
std::strong_ordering position_cmp(const BasisIndex& a, const BasisIndex& b);

struct BasisIndexLess {
  bool operator()(const BasisIndex& a, const BasisIndex& b) const { return position_cmp(a, b) < 0; }
};

struct ModuleMonomial {
  Monomial mono;
  BasisIndex index;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
  std::string to_string() const;
};

/// Position-over-term order: position first, grevlex on ties.
std::strong_ordering pot_cmp(const ModuleMonomial& a, const ModuleMonomial& b);

struct ModuleMonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const;
};

}  // namespace detgb
