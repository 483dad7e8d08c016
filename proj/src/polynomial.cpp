#include "detgb/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

Polynomial Polynomial::term(const Monomial& m, Coeff c, const PrimeField& field) {
  Polynomial f(m.nvars(), field);
  f.add_term(m, c);
  return f;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  const int d = degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw ShapeError("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

Coeff Polynomial::leading_coeff() const {
  if (is_zero()) throw ShapeError("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

Coeff Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Coeff c) {
  if (m.nvars() != nvars_) throw DimensionError("term has wrong number of variables");
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("polynomials over different numbers of variables");
  if (!(field_ == o.field_)) throw DimensionError("polynomials over different fields");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(field_.neg(1)); }

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(nvars_, field_);
  c = field_.reduce(c);
  if (c == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(a, c));
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  Polynomial r(nvars_, field_);
  c = field_.reduce(c);
  if (c == 0) return r;
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& [t, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, field_.mul(a, c));
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.nvars_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, a.field_.mul(ca, cb));
  return r;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (m.degree() > 0) os << '*' << m.to_string();
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars, const PrimeField& field)
      : s_(text), nvars_(nvars), field_(field) {}

  Polynomial parse() {
    Polynomial f(nvars_, field_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [m, c] = parse_term();
      f.add_term(m, negative ? field_.neg(c) : c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return f;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > (1ULL << 62)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  std::pair<Monomial, Coeff> parse_term() {
    skip_ws();
    Coeff c = 1;
    std::vector<Monomial::Exponent> e(static_cast<std::size_t>(nvars_), 0);
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      c = field_.reduce(parse_uint());
      skip_ws();
      if (at_end() || peek() != '*') return {Monomial(e), c};
      ++pos_;
    }
    while (need_factor) {
      skip_ws();
      if (at_end() || peek() != 'x') fail("expected a variable");
      ++pos_;
      const auto idx = parse_uint();
      if (idx < 1 || idx > static_cast<std::uint64_t>(nvars_)) fail("variable index out of range");
      std::uint64_t exp = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exp = parse_uint();
      }
      auto& slot = e[static_cast<std::size_t>(idx - 1)];
      if (slot + exp > 0xFFFF) fail("exponent too large");
      slot = static_cast<Monomial::Exponent>(slot + exp);
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return {Monomial(e), c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int nvars_;
  PrimeField field_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars, const PrimeField& field) {
  if (nvars < 1) throw ShapeError("need at least one variable");
  return PolyParser(text, nvars, field).parse();
}

Polynomial partial_derivative(const Polynomial& f, int j) {
  if (j < 0 || j >= f.nvars()) throw DimensionError("derivative variable out of range");
  const auto& F = f.field();
  Polynomial r(f.nvars(), F);
  for (const auto& [m, c] : f.terms()) {
    if (m[j] == 0) continue;
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    const auto k = e[static_cast<std::size_t>(j)]--;
    r.add_term(Monomial(std::move(e)), F.mul(c, F.reduce(k)));
  }
  return r;
}

Polynomial random_homogeneous(int n, int d, const PrimeField& field, std::mt19937_64& rng) {
  if (d < 1) throw ShapeError("random_homogeneous needs degree >= 1");
  Polynomial f(n, field);
  for (const auto& m : enumerate_monomials(n, d)) f.add_term(m, field.random(rng));
  return f;
}

Polynomial homogenize(const Polynomial& f) {
  if (f.is_zero()) throw ShapeError("cannot homogenize the zero polynomial");
  const int D = f.degree();
  Polynomial r(f.nvars() + 1, f.field());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    e.push_back(static_cast<Monomial::Exponent>(D - m.degree()));
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

Polynomial dehomogenize(const Polynomial& f) {
  if (f.nvars() < 2) throw ShapeError("dehomogenize needs at least two variables");
  Polynomial r(f.nvars() - 1, f.field());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end() - 1);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

ModuleElement ModuleElement::from_polynomial(const Polynomial& f, const BasisIndex& index) {
  ModuleElement v(f.nvars(), f.field());
  v.add(index, f);
  return v;
}

int ModuleElement::degree() const {
  int d = -1;
  for (const auto& [idx, f] : comps_) d = std::max(d, f.degree());
  return d;
}

bool ModuleElement::is_homogeneous() const {
  const int d = degree();
  for (const auto& [idx, f] : comps_)
    if (!f.is_homogeneous() || f.degree() != d) return false;
  return true;
}

ModuleMonomial ModuleElement::leading_monomial() const {
  if (is_zero()) throw ShapeError("zero module element has no leading monomial");
  // Components are ordered by increasing position; the last one leads.
  const auto& [idx, f] = *comps_.rbegin();
  return {f.leading_monomial(), idx};
}

Polynomial ModuleElement::component(const BasisIndex& index) const {
  auto it = comps_.find(index);
  return it == comps_.end() ? Polynomial(nvars_, field_) : it->second;
}

void ModuleElement::add(const BasisIndex& index, const Polynomial& f) {
  if (f.nvars() != nvars_) throw DimensionError("component has wrong number of variables");
  if (!comps_.empty() && (comps_.begin()->first.kind() != index.kind() ||
                          comps_.begin()->first.ids().size() != index.ids().size()))
    throw TypeError("mixed basis kinds in one module element");
  if (f.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(index, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

std::string ModuleElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, f] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f.to_string() << ")*" << idx.to_string();
  }
  return os.str();
}

PolyMatrix::PolyMatrix(int rows, int cols, int entry_degree, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entry_degree_(entry_degree), entries_(std::move(entries)) {
  if (rows < 1 || cols < 1) throw ShapeError("matrix needs at least one row and column");
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw ShapeError("matrix entry count does not match its shape");
  for (const auto& f : entries_) {
    if (f.nvars() != entries_.front().nvars()) throw DimensionError("matrix entries over different rings");
    if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != entry_degree))
      throw ShapeError("matrix entry is not homogeneous of degree " + std::to_string(entry_degree));
  }
}

}  // namespace detgb
