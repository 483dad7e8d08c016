#include <doctest.h>

#include <random>

#include "detgb/determinantal.hpp"
#include "detgb/errors.hpp"
#include "detgb/hilbert.hpp"
#include "oracle.hpp"

using namespace detgb;

namespace {

Polynomial P(const char* s, int n) { return parse_polynomial(s, n, PrimeField()); }

PolyMatrix random_matrix(int n, int p, int q, int d0, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> e;
  for (int k = 0; k < p * q; ++k) e.push_back(random_homogeneous(n, d0, PrimeField(), rng));
  return PolyMatrix(p, q, d0, e);
}

// 2 x 4 matrix whose entries are the distinct variables x1..x8, row-major.
PolyMatrix variable_matrix() {
  std::vector<Polynomial> e;
  for (int k = 0; k < 8; ++k) e.push_back(Polynomial::term(Monomial::variable(8, k), 1, PrimeField()));
  return PolyMatrix(2, 4, 1, e);
}

}  // namespace

TEST_CASE("subset ordinals") {
  const auto subs = lex_subsets(5, 3);
  REQUIRE(subs.size() == 10);
  CHECK(subs.front() == std::vector<int>{1, 2, 3});
  CHECK(subs.back() == std::vector<int>{3, 4, 5});
  for (std::size_t k = 0; k < subs.size(); ++k) {
    CHECK(subset_ordinal(subs[k], 5) == k);
    CHECK(subset_from_ordinal(k, 3, 5) == subs[k]);
  }
  CHECK(minor_index({2, 4}, 4).ordinal == 4);
  CHECK_THROWS_AS(minor_index({3, 2}, 4), ShapeError);
}

TEST_CASE("jacobian") {
  const auto J = jacobian(P("x1^2", 2), {P("x2^2", 2)});
  CHECK(J.rows() == 2);
  CHECK(J.entry_degree() == 1);
  CHECK(J.at(0, 0) == P("2*x1", 2));
  CHECK(J.at(0, 1).is_zero());
  CHECK(J.at(1, 1) == P("2*x2", 2));
  const auto K = jacobian(P("x1*x2", 2), {P("x1^2", 2)});
  CHECK(K.at(0, 0) == P("x2", 2));
  CHECK(K.at(0, 1) == P("x1", 2));
  CHECK(K.at(1, 0) == P("2*x1", 2));
  CHECK(K.at(1, 1).is_zero());
  std::mt19937_64 rng(4);
  const auto g = random_homogeneous(3, 3, PrimeField(), rng);
  const auto f = random_homogeneous(3, 3, PrimeField(), rng);
  const auto R = jacobian(g, {f});
  for (const auto& e : R.entries()) CHECK(e.degree() == 2);
  CHECK_THROWS_AS(jacobian(P("x1^2", 2), {P("x2^3", 2)}), ShapeError);
}

TEST_CASE("minors") {
  const auto A = variable_matrix();
  const auto M = maximal_minors(A);
  REQUIRE(M.size() == 6);
  CHECK(M[5] == parse_polynomial("x3*x8 - x4*x7", 8, PrimeField()));
  CHECK(M[0] == parse_polynomial("x1*x6 - x2*x5", 8, PrimeField()));
  const std::vector<int> rows{1, 2}, cols{3, 4};
  CHECK(minor(A, rows, cols) == M[5]);

  const PolyMatrix row(1, 3, 1, {P("x1", 2), P("x2", 2), P("x1 + x2", 2)});
  CHECK(maximal_minors(row) == row.entries());

  const auto S = random_matrix(3, 3, 3, 2, 5);
  const auto one = maximal_minors(S);
  REQUIRE(one.size() == 1);
  CHECK(one[0].degree() == 6);

  const auto small = minors(A, 1);
  CHECK(small.size() == 8);
  CHECK(small[1] == A.at(1, 0));
  CHECK_THROWS_AS(minors(A, 3), ShapeError);
}

TEST_CASE("first boundary of the Eagon-Northcott complex") {
  const auto A = variable_matrix();
  const auto v = en_first_syzygy(A, 1, {2, 3, 4});
  CHECK(v.component(BasisIndex::wedge({3, 4})) == A.at(0, 1));
  CHECK(v.component(BasisIndex::wedge({2, 4})) == -A.at(0, 2));
  CHECK(v.component(BasisIndex::wedge({2, 3})) == A.at(0, 3));
  CHECK(evaluate_minors(v, A).is_zero());

  const PolyMatrix K(1, 2, 1, {P("x1", 2), P("x2", 2)});
  const auto k = en_first_syzygy(K, 1, {1, 2});
  CHECK(k.component(BasisIndex::wedge({2})) == P("x1", 2));
  CHECK(k.component(BasisIndex::wedge({1})) == P("-x2", 2));
  CHECK(evaluate_minors(k, K).is_zero());

  const auto R = random_matrix(3, 2, 3, 2, 9);
  for (int i = 1; i <= 2; ++i) CHECK(evaluate_minors(en_first_syzygy(R, i, {1, 2, 3}), R).is_zero());
  const auto B = random_matrix(3, 3, 5, 1, 10);
  for (const auto& T : lex_subsets(5, 4))
    for (int i = 1; i <= 3; ++i) CHECK(evaluate_minors(en_first_syzygy(B, i, T), B).is_zero());
  CHECK_THROWS_AS(en_first_syzygy(R, 3, {1, 2, 3}), ShapeError);
  CHECK_THROWS_AS(en_first_syzygy(R, 1, {1, 2}), ShapeError);
}

TEST_CASE("syzygy leading terms") {
  const PolyMatrix K(1, 2, 1, {P("x1", 2), P("x2", 2)});
  const auto H = en_syzygy_terms(K, 2);
  REQUIRE(H.size() == 1);
  CHECK(H[0].lead == Monomial{1, 0});
  CHECK(H[0].position.cols == std::vector<int>{2});
  const auto S = en_leading_terms(K, 2);
  CHECK(S.contains(Monomial{1, 0}, 2));

  CHECK(en_syzygy_terms(random_matrix(3, 2, 2, 1, 1), 6).empty());

  const auto A = random_matrix(3, 2, 4, 1, 12);
  const auto counts = layer_counts(en_syzygy_terms(A, 4), 3, 2);
  for (int delta = 0; delta <= 2; ++delta) {
    INFO("delta " << delta);
    CHECK(BigInt(counts.at(delta)) == syzygy_count(3, 2, 4, 1, delta + 2));
  }
}

TEST_CASE("syzygy leading terms are true syzygy leads") {
  const auto A = random_matrix(3, 2, 4, 1, 21);
  const auto M = maximal_minors(A);
  const auto terms = en_syzygy_terms(A, 5);
  for (int d = 2; d <= 5; ++d) {
    const auto syz = oracle::syzygy_leads(M, 3, d, 65521);
    for (const auto& t : terms)
      if (t.lead.degree() + 2 == d) CHECK(syz.count({t.position.ordinal, oracle::exps_of(t.lead)}) == 1);
  }
}

TEST_CASE("maximal minors driver") {
  const PolyMatrix K(1, 2, 1, {P("x1", 2), P("x2", 2)});
  SigGBOptions off;
  off.f5_criterion = false;
  const auto with = max_minors_sig_gb(K, 3, true, off);
  const auto without = max_minors_sig_gb(K, 3, false, off);
  CHECK(with.total_zero_reductions() == 0);
  CHECK(without.total_zero_reductions() == 1);
  REQUIRE(with.leading_monomials().size() == 2);
  CHECK(with.basis.size() == 2);

  for (unsigned seed = 0; seed < 3; ++seed) {
    const auto A = random_matrix(3, 2, 3, 1, 30 + seed);
    const auto r = max_minors_sig_gb(A, 4);
    const auto M = as_module_elements(maximal_minors(A));
    const auto lz = lazard_gb(M, std::vector<int>(M.size(), 2), 4);
    CHECK(r.leading_monomials() == lz.leading_monomials());
    CHECK(is_groebner_up_to(r.basis, M, 4));
  }
}

TEST_CASE("critical point toy") {
  const auto r = crit_gb({P("x2^2", 2)}, P("x1^2", 2), 6);
  const auto lms = r.leading_monomials();
  REQUIRE(lms.size() == 2);
  CHECK(lms[0].mono == Monomial{1, 1});
  CHECK(lms[1].mono == Monomial{0, 2});
  const auto sys = make_crit_system({P("x2^2", 2)}, P("x1^2", 2));
  CHECK(sys.generators()[1] == P("4*x1*x2", 2));
  CHECK(sys.generator_degrees() == std::vector<int>{2, 2});
}

TEST_CASE("critical point drivers agree with the oracle") {
  std::mt19937_64 rng(55);
  const PrimeField K;
  for (int trial = 0; trial < 2; ++trial) {
    const auto g = random_homogeneous(3, 2, K, rng);
    const auto f = random_homogeneous(3, 2, K, rng);
    const auto r = crit_gb({f}, g, 9);
    const auto plain = crit_gb({f}, g, 9, false);
    const auto lz = crit_lazard_gb({f}, g, 9);
    CHECK(r.leading_monomials() == lz.leading_monomials());
    CHECK(plain.leading_monomials() == lz.leading_monomials());
    CHECK(r.total_zero_reductions() <= plain.total_zero_reductions());
    CHECK(r.total_rows_built() <= plain.total_rows_built());
    const auto gens = make_crit_system({f}, g).generators();
    std::set<oracle::Exps> got;
    for (const auto& m : r.leading_monomials()) got.insert(oracle::exps_of(m.mono));
    CHECK(got == oracle::minimal_leads(gens, 3, 9, 65521));
  }
}

TEST_CASE("critical point preconditions") {
  CHECK_THROWS_AS(make_crit_system({P("x2", 2)}, P("x1", 2)), ShapeError);
  CHECK_THROWS_AS(make_crit_system({P("x2^2", 2), P("x1^2", 2)}, P("x1*x2", 2)), ShapeError);
  CHECK_THROWS_AS(make_crit_system({P("x2^3", 2)}, P("x1^2", 2)), ShapeError);
}

TEST_CASE("direct sum of syzygy modules") {
  std::mt19937_64 rng(71);
  const PrimeField K;
  const auto g = random_homogeneous(3, 2, K, rng);
  const auto f = random_homogeneous(3, 2, K, rng);
  const auto rep = syzygy_direct_sum_check({f}, g, 8);
  CHECK(rep.holds());
  CHECK_FALSE(rep.minors_vanish);
  CHECK(rep.rows.size() == 9);
  CHECK(rep.to_string().find("verdict: holds") != std::string::npos);

  const auto bad = syzygy_direct_sum_check({P("x1*x2", 3)}, P("x1^2", 3), 8);
  CHECK_FALSE(bad.holds());
  CHECK_THROWS_AS(syzygy_direct_sum_check({}, g, 8), ShapeError);
}
