#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permgrid/error.hpp"
#include "permgrid/series.hpp"
#include "permgrid/tables.hpp"

using namespace permgrid;

namespace {
std::vector<BigInt> seq(std::initializer_list<int> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("table examples") {
  const StatTable a1 = table(StatKind::A, 1, TableMethod::brute);
  CHECK(a1.a(1, 1) == 1);
  const StatTable a3 = table(StatKind::A, 3, TableMethod::brute);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(a3.a(i, j) == (i != j ? 0 : i == 2 ? 4 : 1));
  }
  CHECK(table(StatKind::I, 4, TableMethod::brute).sequence() == seq({1, 4, 4, 1}));
  CHECK(table(StatKind::J, 4, TableMethod::brute).sequence() == seq({0, 1, 1, 1}));
}

TEST_CASE("table preconditions") {
  CHECK_THROWS_AS(table(StatKind::J, 5, TableMethod::brute), DomainError);
  CHECK_THROWS_AS(table(StatKind::A, 0, TableMethod::brute), DomainError);
  CHECK_THROWS_AS(table(StatKind::A, 10, TableMethod::brute), LimitError);
  CHECK_THROWS_AS(table(StatKind::I, 13, TableMethod::bijective), LimitError);
  TableOptions raised;
  raised.caps.all = 10;
  CHECK_NOTHROW(raised.caps.check(PermKind::all, 10));
}

TEST_CASE("recurrence examples") {
  const StatTable a2 = table(StatKind::A, 2, TableMethod::brute);
  CHECK(recurrence_rhs_A(3, 2, 2, a2) == 12);
  const StatTable i2 = table(StatKind::I, 2, TableMethod::brute);
  const StatTable i1 = table(StatKind::I, 1, TableMethod::brute);
  CHECK(recurrence_rhs_I(3, 1, i2, i1) == 6);
  const StatTable j2 = table(StatKind::J, 2, TableMethod::brute);
  CHECK(recurrence_rhs_J(4, 2, j2) == 4);
}

TEST_CASE("recurrence bases") {
  CHECK(table(StatKind::A, 1, TableMethod::recurrence).a(1, 1) == 1);
  CHECK(table(StatKind::I, 1, TableMethod::recurrence).sequence() == seq({1}));
  CHECK(table(StatKind::I, 2, TableMethod::recurrence).sequence() == seq({1, 1}));
  CHECK(table(StatKind::J, 2, TableMethod::recurrence).sequence() == seq({0, 1}));
}

TEST_CASE("verify_recurrence reports no mismatches") {
  CHECK(verify_recurrence(StatKind::A, 7).ok());
  CHECK(verify_recurrence(StatKind::I, 10).ok());
  CHECK(verify_recurrence(StatKind::J, 12).ok());
}

TEST_CASE("property: methods agree and totals match") {
  BigInt fact = 1;
  for (int n = 1; n <= 7; ++n) {
    fact *= n;
    const StatTable b = table(StatKind::A, n, TableMethod::brute);
    CHECK(b.same_entries(table(StatKind::A, n, TableMethod::recurrence)));
    CHECK(b.same_entries(table(StatKind::A, n, TableMethod::bijective)));
    CHECK(b.total() == fact);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) CHECK(b.a(i, j) == b.a(j, i));
    }
  }
  const long long telephone[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int n = 1; n <= 10; ++n) {
    const StatTable b = table(StatKind::I, n, TableMethod::brute);
    CHECK(b.same_entries(table(StatKind::I, n, TableMethod::recurrence)));
    CHECK(b.same_entries(table(StatKind::I, n, TableMethod::bijective)));
    CHECK(b.total() == telephone[n - 1]);
  }
  const long long double_factorial[] = {1, 3, 15, 105, 945, 10395};
  for (int n = 2; n <= 12; n += 2) {
    const StatTable b = table(StatKind::J, n, TableMethod::brute);
    CHECK(b.same_entries(table(StatKind::J, n, TableMethod::recurrence)));
    CHECK(b.same_entries(table(StatKind::J, n, TableMethod::bijective)));
    CHECK(b.total() == double_factorial[n / 2 - 1]);
  }
}

TEST_CASE("brute force is independent of the worker count") {
  TableOptions three;
  three.workers = 3;
  CHECK(table(StatKind::A, 7, TableMethod::brute).same_entries(table(StatKind::A, 7, TableMethod::brute, three)));
  CHECK(table(StatKind::I, 9, TableMethod::brute).same_entries(table(StatKind::I, 9, TableMethod::brute, three)));
}

TEST_CASE("Eulerian marginal") {
  CHECK(eulerian_numbers(3) == seq({1, 4, 1}));
  CHECK(eulerian_numbers(4)[1] == 11);
  CHECK(eulerian_numbers(1) == seq({1}));
  CHECK(eulerian_numbers(8) == seq({1, 247, 4293, 15619, 15619, 4293, 247, 1}));
  const MarginalReport r3 = eulerian_marginal(3);
  CHECK(r3.row_sums[1] == 4);
  CHECK(eulerian_marginal(1).row_sums == seq({1}));
  CHECK(eulerian_marginal(4).row_sums[1] == 11);
  for (int n = 1; n <= 8; ++n) CHECK(eulerian_marginal(n).ok());
}

TEST_CASE("unimodal and log-concave") {
  CHECK(is_unimodal(seq({1, 4, 4, 1})));
  CHECK_FALSE(is_unimodal(seq({1, 0, 1})));
  CHECK(is_unimodal(seq({0, 1, 1, 1})));
  CHECK(is_unimodal(seq({5})));
  CHECK(is_log_concave(seq({1, 4, 4, 1})));
  CHECK_FALSE(is_log_concave(seq({1, 1, 4})));
  for (int n = 1; n <= 12; ++n) CHECK(is_unimodal(table(StatKind::I, n, TableMethod::recurrence).sequence()));
}

TEST_CASE("parse names") {
  CHECK(parse_stat_kind("J") == StatKind::J);
  CHECK(parse_table_method("bijective") == TableMethod::bijective);
  CHECK_THROWS_AS(parse_stat_kind("K"), ParseError);
}

// ---------------------------------------------------------------------------
// Series.

TEST_CASE("truncated series arithmetic") {
  using S = TruncatedSeries;
  const S one = S::constant(4, 4, 1);
  const S u = S::monomial(4, 4, 1, 0), t = S::monomial(4, 4, 0, 1);
  const S x = one - u - t * S::constant(4, 4, 2);
  CHECK(x * x.reciprocal() == one);
  // 1/(1-u) = sum u^k within the window.
  const S geo = (one - u).reciprocal();
  for (int k = 0; k <= 4; ++k) CHECK(geo.coeff(k, 0) == 1);
  CHECK(geo.coeff(1, 1) == 0);
  CHECK((one - u).pow(3).coeff(2, 0) == 3);
  CHECK(u.pow(5) == S(4, 4));  // falls outside the window
  CHECK_THROWS_AS(u.reciprocal(), DomainError);
  CHECK_THROWS_AS(S(2, 2) + S(3, 2), DomainError);
}

TEST_CASE("generating-function identities") {
  const TruncatedSeries lhs = gf_lhs(StatKind::I, 0, 5);
  for (int r = 0; r <= 5; ++r) CHECK(lhs.coeff(0, r) == 1);
  CHECK(gf_check(StatKind::I, 6).ok());
  CHECK(gf_check(StatKind::J, 6).ok());
  CHECK(gf_check(StatKind::J, 6, 2).ok());
  const TruncatedSeries j = gf_rhs(StatKind::J, 5, 5);
  for (int r = 0; r <= 5; ++r) {
    CHECK(j.coeff(1, r) == 0);
    CHECK(j.coeff(3, r) == 0);
  }
  CHECK_THROWS_AS(gf_check(StatKind::I, 6, -1), DomainError);
  CHECK_THROWS_AS(gf_check(StatKind::I, 13), LimitError);
}

TEST_CASE("generating-function check notices a wrong polynomial") {
  // Perturbing one coefficient of the left side must show up as a mismatch.
  TruncatedSeries lhs = gf_lhs(StatKind::I, 4, 4);
  lhs.coeff(3, 1) += 1;
  CHECK_FALSE(lhs == gf_rhs(StatKind::I, 4, 4));
}
