#include <doctest.h>

#include <random>

#include "detgb/determinantal.hpp"
#include "detgb/errors.hpp"
#include "detgb/hilbert.hpp"
#include "oracle.hpp"

using namespace detgb;

namespace {

std::vector<BigInt> V(std::initializer_list<int> xs) {
  std::vector<BigInt> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("binomials vanish out of range") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("series quotients") {
  const auto a = series_quotient_truncate(one_minus_t_pow(2, 3), one_minus_t_pow(1, 2), 10);
  CHECK(a.coefficients() == V({1, 2}));
  CHECK(a.truncation_index() == 2);
  CHECK(a.nominal_length() == 11);
  CHECK(a[7] == 0);
  const auto b = series_quotient_truncate({1}, one_minus_t_pow(1, 2), 4);
  CHECK(b.coefficients() == V({1, 2, 3, 4, 5}));
  CHECK(b.truncation_index() == -1);
  const auto c = series_quotient_truncate(one_minus_t_pow(1, 1), one_minus_t_pow(1, 1), 9);
  CHECK(c.coefficients() == V({1}));
  CHECK_THROWS_AS(series_quotient({1}, {0, 1}, 3), ShapeError);
  CHECK(series_quotient({1}, {-1, 1}, 3) == V({-1, -1, -1, -1}));
  CHECK(poly_mul(one_minus_t_pow(1, 1), one_minus_t_pow(1, 1)) == one_minus_t_pow(1, 2));
}

TEST_CASE("semi-regular Hilbert function") {
  CHECK(hf_semiregular(2, 3, 2, 2) == 0);
  CHECK(hf_semiregular(3, 1, 2, 3) == 7);
  CHECK(hf_semiregular(2, 1, 1, 5) == 1);
  CHECK(hf_semiregular(3, 2, 2, 4) == 4);
  CHECK(hf_semiregular(3, 0, 2, 4) == 15);
}

TEST_CASE("closed form agrees with series truncation on the grid") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 12; ++m)
      for (int d0 = 1; d0 <= 4; ++d0)
        for (int d = 0; d <= 30; ++d) REQUIRE(hf_semiregular(n, m, d0, d) == hf_semiregular_closed(n, m, d0, d));
}

TEST_CASE("column ideals") {
  CHECK(hf_column_ideal(3, 1, 2, 1, 2, EntryMode::Derived) == 5);
  CHECK(hf_column_ideal(5, 1, 2, 3, 10, EntryMode::Derived) == binomial(14, 4));
  CHECK(hf_column_ideal(5, 1, 3, 1, 1, EntryMode::Derived) == 0);
  CHECK_THROWS_AS(hf_column_ideal(3, 1, 2, 2, 2, EntryMode::Derived), ShapeError);
  for (int d = 0; d <= 12; ++d)
    for (int k = 1; k < 4; ++k)
      CHECK(hf_column_ideal(6, 1, 3, k, d, EntryMode::Derived) <= hf_column_ideal(6, 1, 3, k + 1, d, EntryMode::Derived));
}

TEST_CASE("minors ideal") {
  CHECK(hf_minors_ideal(3, 1, 2, 1, 2) == 5);
  CHECK(hf_minors_ideal(4, 3, 3, 2, 9) == binomial(4 + 9 - 6 - 1, 3));
  CHECK(hf_minors_ideal(2, 2, 2, 1, 3) == 2);
  CHECK_THROWS_AS(hf_minors_ideal(3, 3, 2, 1, 2), ShapeError);
}

TEST_CASE("minors ideal matches Macaulay ranks") {
  std::mt19937_64 rng(3);
  const PrimeField K;
  std::vector<Polynomial> e;
  for (int k = 0; k < 8; ++k) e.push_back(random_homogeneous(3, 1, K, rng));
  const PolyMatrix A(2, 4, 1, e);
  const auto M = maximal_minors(A);
  for (int d = 0; d <= 6; ++d) CHECK(hf_minors_ideal(3, 2, 4, 1, d) == oracle::macaulay_rank(M, 3, d, 65521));
}

TEST_CASE("critical ideal Hilbert function") {
  for (auto mode : {EntryMode::Derived, EntryMode::Paper})
    for (int n = 2; n <= 5; ++n)
      for (int p = 0; p + 1 <= n; ++p)
        for (int d0 = 2; d0 <= 3; ++d0) {
          CHECK(hf_crit(n, p, d0, 0, mode) == 1);
          for (int d = 0; d <= 30; ++d) REQUIRE(hf_crit(n, p, d0, d, mode) == hf_crit_series(n, p, d0, d, mode));
        }
  CHECK(hf_crit(3, 1, 2, 40, EntryMode::Derived) == 0);
  CHECK(hf_crit(3, 1, 2, 40, EntryMode::Paper) == 0);

  std::mt19937_64 rng(17);
  const PrimeField K;
  const auto g = random_homogeneous(2, 2, K, rng);
  const auto f = random_homogeneous(2, 2, K, rng);
  const auto gens = make_crit_system({f}, g).generators();
  CHECK(hf_crit(2, 1, 2, 2, EntryMode::Derived) == 3 - BigInt(oracle::macaulay_rank(gens, 2, 2, 65521)));
}

TEST_CASE("syzygy and row counts") {
  CHECK(syzygy_count(2, 1, 2, 1, 2) == 1);
  CHECK(syzygy_count(4, 3, 6, 3, 8) == 0);
  for (int d = 0; d <= 15; ++d)
    CHECK(rows_minors(4, 3, 6, 3, d) == binomial(6, 3) * binomial(4 + d - 9 - 1, 3) - syzygy_count(4, 3, 6, 3, d));
  CHECK(rows_minors(4, 3, 6, 3, 8) == 0);
  CHECK(rows_crit(4, 1, 2, 1, EntryMode::Derived) == 0);
  for (int d = 0; d <= 11; ++d) CHECK(rows_crit(4, 1, 2, d, EntryMode::Derived) >= 0);
}

TEST_CASE("degree bounds") {
  CHECK(degree_bound_crit(4, 1, 2) == 11);
  CHECK(degree_bound_minors(4, 3, 3) == 15);
  CHECK(lazard_bound(3, 6, 4, 3) == 77520);
}

TEST_CASE("complexity estimate") {
  EstimatorParams P{4, 1, 0, 2, 2.0, EntryMode::Derived};
  BigInt plain = 0;
  for (int d = 2; d <= 11; ++d) plain += rows_crit(4, 1, 2, d, EntryMode::Derived) * binomial(d + 3, 3);
  CHECK(complexity_estimate(P) == plain);
  CHECK(plain == 736306);
  P.omega = 2.81;
  CHECK(complexity_estimate(P) == 72037715);
  P.omega = 2.5;
  const auto lo = complexity_estimate(P);
  P.omega = 3.0;
  CHECK(complexity_estimate(P) > lo);
  P.omega = 3.5;
  CHECK_THROWS_AS(complexity_estimate(P), ShapeError);
}

TEST_CASE("row ratios") {
  CHECK(format_ratio(1, 3) == "0.333");
  CHECK(format_ratio(2, 3) == "0.667");
  CHECK(format_ratio(77520, 2894) == "26.786");
  CHECK_THROWS_AS(format_ratio(1, 0), ShapeError);
  const auto r = speedup_row(4, 3, 6, 3);
  CHECK(r.D == 15);
  CHECK(r.rows_ours == 2894);
  CHECK(r.rows_fullrank == 2661);
  CHECK(r.ratio_ours == "26.786");
  CHECK(r.ratio_fullrank == "29.132");
  const auto s = speedup_row(5, 3, 7, 3);
  CHECK(s.rows_ours == 26361);
  CHECK(s.ratio_ours == "34.964");
  CHECK(s.ratio_fullrank == "43.412");
}

TEST_CASE("speedup table") {
  const auto rows = speedup_table({4, 5, 6}, {2, 3}, {2, 3, 4});
  REQUIRE(rows.size() == 18);
  CHECK(rows[0].p == 2);
  CHECK(rows[0].q == 5);
  for (const auto& r : rows) {
    CHECK(r.rows_fullrank <= r.rows_ours);
    CHECK(std::stod(r.ratio_fullrank) >= std::stod(r.ratio_ours));
  }
  const auto csv = speedup_csv({speedup_row(4, 3, 6, 3)});
  CHECK(csv == "n,p,q,d0,D,rows_ours,rows_lazard,rows_fullrank,ratio_ours,ratio_fullrank\n"
               "4,3,6,3,15,2894,77520,2661,26.786,29.132\n");
  CHECK(speedup_csv({}, true).find("speedup_fullrank") != std::string::npos);
}

TEST_CASE("plain-row speedup grows with d0") {
  double prev = 0;
  for (int d0 = 3; d0 <= 20; ++d0) {
    const double v = std::stod(speedup_row(4, 3, 6, d0).speedup_ours);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK(prev > std::stod(speedup_row(4, 3, 6, 3).speedup_ours));
}

TEST_CASE("entry modes") {
  CHECK(entry_degree(3, EntryMode::Derived) == 2);
  CHECK(entry_degree(3, EntryMode::Paper) == 3);
  CHECK(parse_entry_mode("paper-literal") == EntryMode::Paper);
  CHECK(to_string(EntryMode::Derived) == "derived");
  CHECK_THROWS_AS(parse_entry_mode("other"), ParseError);
}
