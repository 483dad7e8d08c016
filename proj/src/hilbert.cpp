#include "detgb/hilbert.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "detgb/errors.hpp"

namespace detgb {

using Real = boost::multiprecision::cpp_dec_float_50;

BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long long k = 1; k <= b; ++k) {
    r *= a - b + k;
    r /= k;
  }
  return r;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

IntPoly one_minus_t_pow(int k, int m) {
  if (k < 0 || m < 0) throw ShapeError("negative exponent in (1 - t^k)^m");
  if (k == 0) return m == 0 ? IntPoly{1} : IntPoly{0};
  IntPoly r(static_cast<std::size_t>(k) * static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i <= m; ++i) r[static_cast<std::size_t>(i) * static_cast<std::size_t>(k)] = (i % 2 ? -1 : 1) * binomial(m, i);
  return r;
}

BigInt TruncatedSeries::operator[](int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

std::vector<BigInt> series_quotient(const IntPoly& P, const IntPoly& Q, int N) {
  if (Q.empty() || (Q[0] != 1 && Q[0] != -1)) throw ShapeError("series denominator must have constant term +-1");
  std::vector<BigInt> out;
  if (N < 0) return out;
  out.reserve(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    BigInt v = static_cast<std::size_t>(k) < P.size() ? P[static_cast<std::size_t>(k)] : BigInt(0);
    for (std::size_t j = 1; j < Q.size() && j <= static_cast<std::size_t>(k); ++j)
      v -= Q[j] * out[static_cast<std::size_t>(k) - j];
    out.push_back(Q[0] == 1 ? v : BigInt(-v));
  }
  return out;
}

TruncatedSeries series_quotient_truncate(const IntPoly& P, const IntPoly& Q, int N) {
  auto raw = series_quotient(P, Q, N);
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (raw[k] <= 0) {
      raw.resize(k);
      return TruncatedSeries(std::move(raw), N + 1, static_cast<int>(k));
    }
  return TruncatedSeries(std::move(raw), N + 1, -1);
}

int entry_degree(int d0, EntryMode mode) { return mode == EntryMode::Derived ? d0 - 1 : d0; }

EntryMode parse_entry_mode(const std::string& s) {
  if (s == "derived") return EntryMode::Derived;
  if (s == "paper" || s == "paper-literal") return EntryMode::Paper;
  throw ParseError("unknown entry-degree mode '" + s + "' (expected derived or paper)");
}

std::string to_string(EntryMode mode) { return mode == EntryMode::Derived ? "derived" : "paper"; }

namespace {

struct RawSeries {
  std::vector<BigInt> coeffs;
  int first_nonpositive = -1;
};

// Raw coefficients of (1 - t^d0)^m / (1 - t)^n, cached per (n, m, d0)
// because the row-count sums query the same series at every degree.
// Returns the truncated coefficient of t^upto.
BigInt semiregular_value(int n, int m, int d0, int upto) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, RawSeries> cache;
  std::lock_guard<std::mutex> lock(mu);
  RawSeries& s = cache[{n, m, d0}];
  auto value = [&]() -> BigInt {
    if (s.first_nonpositive >= 0 && s.first_nonpositive <= upto) return 0;
    return s.coeffs[static_cast<std::size_t>(upto)];
  };
  if (static_cast<int>(s.coeffs.size()) > upto) return value();
  const int L = std::max(upto, 2 * static_cast<int>(s.coeffs.size()));
  std::vector<BigInt> a(static_cast<std::size_t>(L) + 1, 0);
  for (int i = 0; i <= m && i * d0 <= L; ++i) a[static_cast<std::size_t>(i * d0)] = (i % 2 ? -1 : 1) * binomial(m, i);
  for (int r = 0; r < n; ++r)
    for (std::size_t k = 1; k < a.size(); ++k) a[k] += a[k - 1];
  s.first_nonpositive = -1;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] <= 0) {
      s.first_nonpositive = static_cast<int>(k);
      break;
    }
  s.coeffs = std::move(a);
  return value();
}

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

}  // namespace

BigInt hf_semiregular(int n, int m, int d0, int d) {
  require_shape(n >= 1 && m >= 0 && d0 >= 0, "hf_semiregular needs n >= 1, m >= 0, d0 >= 0");
  if (d < 0) return 0;
  if (m == 0) return binomial(n + d - 1, n - 1);
  if (d0 == 0) return 0;
  return semiregular_value(n, m, d0, d);
}

BigInt hf_semiregular_closed(int n, int m, int d0, int d) {
  require_shape(n >= 1 && m >= 0 && d0 >= 0, "hf_semiregular needs n >= 1, m >= 0, d0 >= 0");
  if (d < 0) return 0;
  if (m > 0 && d0 == 0) return 0;
  auto term = [&](int k) {
    BigInt a = 0;
    const int top = m == 0 ? 0 : (n + k - 1) / d0;
    for (int i = 0; i <= top && i <= m; ++i) {
      const BigInt t = binomial(m, i) * binomial(n + k - static_cast<long long>(i) * d0 - 1, n - 1);
      a += i % 2 ? BigInt(-t) : t;
    }
    return a;
  };
  BigInt last = 0;
  for (int k = 0; k <= d; ++k) {
    last = term(k);
    if (last <= 0) return 0;
  }
  return last;
}

BigInt hf_ideal_semiregular(int n, int m, int e, int d) {
  if (d < 0) return 0;
  return binomial(n + d - 1, n - 1) - hf_semiregular(n, m, e, d);
}

BigInt hf_column_ideal(int n, int p, int d0, int k, int d, EntryMode mode) {
  require_shape(k >= 1 && k <= n - p - 1, "column index k must lie in 1..n-p-1");
  return hf_ideal_semiregular(n, (p + 1) * k, entry_degree(d0, mode), d);
}

BigInt hf_minors_ideal(int n, int p, int q, int e, int d) {
  require_shape(p >= 1 && p <= q, "hf_minors_ideal needs 1 <= p <= q");
  BigInt s = 0;
  for (int j = 0; j <= q - p; ++j) {
    const BigInt t = binomial(n + d - static_cast<long long>(p + j) * e - 1, n - 1) * binomial(p + j - 1, p - 1) *
                     binomial(q, p + j);
    s += j % 2 ? BigInt(-t) : t;
  }
  return s;
}

BigInt hf_crit(int n, int p, int d0, int d, EntryMode mode) {
  require_shape(p >= 0 && p + 1 <= n, "hf_crit needs p+1 <= n");
  const int e = entry_degree(d0, mode);
  BigInt s = 0;
  for (int i = 0; i <= p; ++i) {
    const int di = d - i * d0;
    const BigInt t = binomial(p, i) * (binomial(n + di - 1, n - 1) - hf_minors_ideal(n, p + 1, n, e, di));
    s += i % 2 ? BigInt(-t) : t;
  }
  return s;
}

BigInt hf_crit_series(int n, int p, int d0, int d, EntryMode mode) {
  require_shape(p >= 0 && p + 1 <= n, "hf_crit needs p+1 <= n");
  if (d < 0) return 0;
  const int e = entry_degree(d0, mode);
  const int r = p + 1;
  // Numerator of the Hilbert series of R / I_minors over (1 - t)^n.
  IntPoly num(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(e, 1)) + 1, 0);
  num[0] = 1;
  for (int j = 0; j <= n - r; ++j) {
    const auto deg = static_cast<std::size_t>((r + j) * e);
    if (deg >= num.size()) num.resize(deg + 1, 0);
    const BigInt c = binomial(r + j - 1, r - 1) * binomial(n, r + j);
    num[deg] -= j % 2 ? BigInt(-c) : c;
  }
  const IntPoly P = poly_mul(num, one_minus_t_pow(d0, p));
  const auto series = series_quotient(P, one_minus_t_pow(1, n), d);
  return series[static_cast<std::size_t>(d)];
}

BigInt syzygy_count(int n, int p, int q, int d0, int d) {
  require_shape(p >= 1 && p <= q, "syzygy_count needs 1 <= p <= q");
  const int delta = d - p * d0;
  if (delta < 0) return 0;
  BigInt s = 0;
  for (int k = 1; k <= q - p; ++k) s += hf_ideal_semiregular(n, p * k, d0, delta) * binomial(q - k - 1, p - 1);
  return s;
}

BigInt rows_minors(int n, int p, int q, int d0, int d) {
  return binomial(q, p) * binomial(n + d - static_cast<long long>(p) * d0 - 1, n - 1) - syzygy_count(n, p, q, d0, d);
}

BigInt rows_crit(int n, int p, int d0, int d, EntryMode mode) {
  require_shape(p >= 0 && p + 1 <= n, "rows_crit needs p+1 <= n");
  const int e = entry_degree(d0, mode);
  const int shift = (p + 1) * e;
  BigInt r = p * binomial(n + d - d0 - 1, n - 1) + binomial(n + d - shift - 1, n - 1) * binomial(n, p + 1);
  if (d - shift >= 0)
    for (int k = 1; k <= n - p - 1; ++k) r -= hf_column_ideal(n, p, d0, k, d - shift, mode) * binomial(n - k - 1, p);
  return r;
}

BigInt lazard_bound(int p, int q, int n, int d0) {
  return binomial(q, p) * binomial(static_cast<long long>(d0) * (p - 1) + static_cast<long long>(d0 - 1) * n + 1 + n, n);
}

int degree_bound_minors(int n, int p, int d0) { return d0 * (p - 1) + (d0 - 1) * n + 1; }

int degree_bound_crit(int n, int p, int d0) { return (n + p) * d0 + 1; }

BigInt complexity_estimate(const EstimatorParams& P) {
  require_shape(P.omega >= 2.0 && P.omega <= 3.0, "omega must lie in [2, 3]");
  require_shape(P.n >= 2 && P.p >= 0 && P.p + 1 <= P.n && P.d0 >= 1, "estimator shape needs n >= 2, p+1 <= n, d0 >= 1");
  const Real expo = Real(P.omega) - 2;
  Real total = 0;
  for (int d = P.d0; d <= degree_bound_crit(P.n, P.p, P.d0); ++d) {
    const BigInt cols = binomial(P.n + d - 1, P.n - 1);
    const BigInt rank = cols - hf_crit(P.n, P.p, P.d0, d, P.mode);
    const Real factor = expo == 0 ? Real(1) : boost::multiprecision::pow(Real(rank), expo);
    total += factor * Real(rows_crit(P.n, P.p, P.d0, d, P.mode)) * Real(cols);
  }
  return boost::multiprecision::round(total).convert_to<BigInt>();
}

std::string format_ratio(const BigInt& num, const BigInt& den) {
  if (den <= 0) throw ShapeError("ratio with non-positive denominator");
  const BigInt scaled = (num * 2000 + den) / (den * 2);
  std::ostringstream os;
  os << scaled / 1000 << '.';
  const std::string frac = BigInt(scaled % 1000).str();
  os << std::string(3 - frac.size(), '0') << frac;
  return os.str();
}

SpeedupRow speedup_row(int n, int p, int q, int d0) {
  require_shape(n >= 2 && p >= 1 && p <= q && d0 >= 1, "speedup shape needs n >= 2, 1 <= p <= q, d0 >= 1");
  SpeedupRow r;
  r.n = n;
  r.p = p;
  r.q = q;
  r.d0 = d0;
  r.D = degree_bound_minors(n, p, d0);
  r.rows_lazard = lazard_bound(p, q, n, d0);
  const BigInt cq = binomial(q, p);
  for (int d = p * d0; d <= r.D; ++d) {
    r.rows_ours += rows_minors(n, p, q, d0, d);
    r.rows_fullrank += hf_minors_ideal(n, p, q, d0, d);
    r.rows_plain += cq * binomial(n + d - static_cast<long long>(p) * d0 - 1, n - 1);
  }
  r.ratio_ours = format_ratio(r.rows_lazard, r.rows_ours);
  r.ratio_fullrank = format_ratio(r.rows_lazard, r.rows_fullrank);
  r.speedup_ours = format_ratio(r.rows_plain, r.rows_ours);
  r.speedup_fullrank = format_ratio(r.rows_plain, r.rows_fullrank);
  return r;
}

std::vector<SpeedupRow> speedup_table(const std::vector<int>& ns, const std::vector<int>& ps,
                                      const std::vector<int>& d0s, int q_fixed) {
  std::vector<SpeedupRow> out;
  for (int p : ps)
    for (int n : ns)
      for (int d0 : d0s) out.push_back(speedup_row(n, p, q_fixed > 0 ? q_fixed : n + p - 1, d0));
  return out;
}

std::string speedup_csv(const std::vector<SpeedupRow>& rows, bool extra) {
  std::ostringstream os;
  os << "n,p,q,d0,D,rows_ours,rows_lazard,rows_fullrank,ratio_ours,ratio_fullrank";
  if (extra) os << ",rows_plain,speedup_ours,speedup_fullrank";
  os << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.p << ',' << r.q << ',' << r.d0 << ',' << r.D << ',' << r.rows_ours << ',' << r.rows_lazard
       << ',' << r.rows_fullrank << ',' << r.ratio_ours << ',' << r.ratio_fullrank;
    if (extra) os << ',' << r.rows_plain << ',' << r.speedup_ours << ',' << r.speedup_fullrank;
    os << '\n';
  }
  return os.str();
}

}  // namespace detgb
