#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace detgb {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), zero whenever a < 0, b < 0 or a < b.
BigInt binomial(long long a, long long b);

/// Integer polynomial, constant term first.
using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// (1 - t^k)^m.
IntPoly one_minus_t_pow(int k, int m);

/// Power series cut at its first non-positive coefficient.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<BigInt> coeffs, int nominal_length, int truncation_index)
      : coeffs_(std::move(coeffs)), nominal_(nominal_length), trunc_(truncation_index) {}

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int nominal_length() const { return nominal_; }
  /// Index of the first non-positive coefficient, or -1 if none was found
  /// within the nominal length.
  int truncation_index() const { return trunc_; }
  /// Coefficient of t^d; zero past the stored range.
  BigInt operator[](int d) const;

 private:
  std::vector<BigInt> coeffs_;
  int nominal_;
  int trunc_;
};

/// First N+1 coefficients of P/Q, no truncation. Q(0) must be 1 or -1.
std::vector<BigInt> series_quotient(const IntPoly& P, const IntPoly& Q, int N);
TruncatedSeries series_quotient_truncate(const IntPoly& P, const IntPoly& Q, int N);

/// Jacobian entry degree convention: d0 - 1 (derived) or d0 (as printed).
enum class EntryMode { Derived, Paper };
int entry_degree(int d0, EntryMode mode);
EntryMode parse_entry_mode(const std::string& s);
std::string to_string(EntryMode mode);

/// Coefficient of t^d in [(1 - t^d0)^m / (1 - t)^n]_+.
BigInt hf_semiregular(int n, int m, int d0, int d);
/// Same value from the alternating binomial sum with its own truncation.
BigInt hf_semiregular_closed(int n, int m, int d0, int d);
/// Ideal Hilbert function of m generic forms of degree e.
BigInt hf_ideal_semiregular(int n, int m, int e, int d);

/// Ideal of the first k columns of a generic (p+1) x n Jacobian.
BigInt hf_column_ideal(int n, int p, int d0, int k, int d, EntryMode mode);
/// Ideal of maximal minors of a generic p x q matrix with entries of degree e.
BigInt hf_minors_ideal(int n, int p, int q, int e, int d);
/// Quotient Hilbert function of R / I_crit by the alternating double sum.
BigInt hf_crit(int n, int p, int d0, int d, EntryMode mode);
/// Same value from the series product H(R/I_minors) * (1 - t^d0)^p.
BigInt hf_crit_series(int n, int p, int d0, int d, EntryMode mode);

/// Syzygy leading terms of degree d - p*d0 for a generic p x q matrix.
BigInt syzygy_count(int n, int p, int q, int d0, int d);
BigInt rows_minors(int n, int p, int q, int d0, int d);
BigInt rows_crit(int n, int p, int d0, int d, EntryMode mode);

BigInt lazard_bound(int p, int q, int n, int d0);
int degree_bound_minors(int n, int p, int d0);
int degree_bound_crit(int n, int p, int d0);

struct EstimatorParams {
  int n = 0;
  int p = 0;
  int q = 0;
  int d0 = 0;
  double omega = 2.81;
  EntryMode mode = EntryMode::Derived;
};

/// Sum over d = d0 .. (n+p)d0+1 of rank^(omega-2) * rows * columns.
BigInt complexity_estimate(const EstimatorParams& params);

struct SpeedupRow {
  int n = 0;
  int p = 0;
  int q = 0;
  int d0 = 0;
  int D = 0;
  BigInt rows_ours;
  BigInt rows_lazard;
  BigInt rows_fullrank;
  BigInt rows_plain;
  std::string ratio_ours;
  std::string ratio_fullrank;
  std::string speedup_ours;
  std::string speedup_fullrank;
};

/// Row totals over degrees p*d0 .. D for the maximal minors of a generic
/// p x q matrix.
SpeedupRow speedup_row(int n, int p, int q, int d0);
/// One row per (n, p, d0); q = n + p - 1 unless q_fixed > 0.
std::vector<SpeedupRow> speedup_table(const std::vector<int>& ns, const std::vector<int>& ps,
                                      const std::vector<int>& d0s, int q_fixed = 0);
/// Header plus rows. `extra` appends rows_plain, speedup_ours, speedup_fullrank.
std::string speedup_csv(const std::vector<SpeedupRow>& rows, bool extra = false);

/// num / den rounded to three decimals.
std::string format_ratio(const BigInt& num, const BigInt& den);

}  // namespace detgb
