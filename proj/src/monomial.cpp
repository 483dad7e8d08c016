#include "detgb/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "detgb/errors.hpp"

namespace detgb {

namespace {

int exponent_sum(const std::vector<Monomial::Exponent>& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

void require_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionError("monomials over " + std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)), degree_(exponent_sum(exps_)) {}

Monomial::Monomial(std::initializer_list<int> exps) {
  exps_.reserve(exps.size());
  for (int e : exps) {
    if (e < 0) throw ShapeError("negative exponent");
    exps_.push_back(static_cast<Exponent>(e));
  }
  degree_ = exponent_sum(exps_);
}

Monomial Monomial::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw DimensionError("variable index out of range");
  Monomial m(nvars);
  m.exps_[static_cast<std::size_t>(j)] = 1;
  m.degree_ = 1;
  return m;
}

int Monomial::max_var() const {
  for (int j = nvars() - 1; j >= 0; --j)
    if (exps_[static_cast<std::size_t>(j)] != 0) return j;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_nvars(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > other.exps_[j]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_nvars(*this, other);
  Monomial r = *this;
  for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] = static_cast<Exponent>(r.exps_[j] + other.exps_[j]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw ShapeError("monomial quotient is not exact");
  Monomial r = *this;
  for (std::size_t j = 0; j < exps_.size(); ++j) r.exps_[j] = static_cast<Exponent>(r.exps_[j] - other.exps_[j]);
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::times_var(int j) const {
  Monomial r = *this;
  ++r.exps_[static_cast<std::size_t>(j)];
  ++r.degree_;
  return r;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (j + 1);
    if (exps_[j] > 1) os << '^' << exps_[j];
  }
  if (first) os << '1';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int j = a.nvars() - 1; j >= 0; --j) {
    if (a[j] != b[j]) return a[j] < b[j] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0;
  for (auto e : m.exponents()) h = mix(h, e);
  return h;
}

std::vector<Monomial> enumerate_monomials(int n, int d) {
  if (n < 1 || d < 0) throw ShapeError("enumerate_monomials needs n >= 1 and d >= 0");
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(static_cast<std::size_t>(n), 0);
  // Compositions of d into n parts, generated recursively.
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == n - 1) {
      e[static_cast<std::size_t>(j)] = static_cast<Monomial::Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(j)] = static_cast<Monomial::Exponent>(k);
      rec(j + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

BasisIndex BasisIndex::free(int i) {
  if (i < 1) throw ShapeError("free basis index must be positive");
  BasisIndex b;
  b.kind_ = Kind::Free;
  b.ids_ = {i};
  return b;
}

BasisIndex BasisIndex::wedge(std::vector<int> cols) {
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] < 1) throw ShapeError("wedge index must be positive");
    if (k > 0 && cols[k] <= cols[k - 1]) throw ShapeError("wedge indices must be strictly increasing");
  }
  BasisIndex b;
  b.kind_ = Kind::Wedge;
  b.ids_ = std::move(cols);
  return b;
}

std::string BasisIndex::to_string() const {
  std::ostringstream os;
  os << "e(";
  for (std::size_t k = 0; k < ids_.size(); ++k) os << (k ? "," : "") << ids_[k];
  os << ')';
  return os.str();
}

std::strong_ordering position_cmp(const BasisIndex& a, const BasisIndex& b) {
  if (a.kind() != b.kind() || a.ids().size() != b.ids().size())
    throw TypeError("incomparable basis positions " + a.to_string() + " and " + b.to_string());
  return std::lexicographical_compare_three_way(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end());
}

std::string ModuleMonomial::to_string() const { return mono.to_string() + "*" + index.to_string(); }

std::strong_ordering pot_cmp(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (auto c = position_cmp(a.index, b.index); c != 0) return c;
  return grevlex_cmp(a.mono, b.mono);
}

std::size_t ModuleMonomialHash::operator()(const ModuleMonomial& m) const {
  std::size_t h = MonomialHash{}(m.mono);
  h = mix(h, static_cast<std::size_t>(m.index.kind()));
  for (int i : m.index.ids()) h = mix(h, static_cast<std::size_t>(i));
  return h;
}

}  // namespace detgb
