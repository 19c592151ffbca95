#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "permgrid/bijections.hpp"
#include "permgrid/enumerate.hpp"
#include "permgrid/error.hpp"

using namespace permgrid;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

struct Row {
  int i;
  const char* sigma;
  GridPoint point;
  std::optional<int> tag;
  const char* label;
  std::pair<int, int> nk;
};

void check_row(const ThetaTrace& t, const Row& want) {
  INFO("i = " << want.i);
  CHECK(t.output.sigma == P(want.sigma));
  CHECK(t.output.point == want.point);
  CHECK(t.output.tag == want.tag);
  CHECK(t.output.label.str() == want.label);
  CHECK(t.target_nk() == want.nk);
}

}  // namespace

TEST_CASE("chi") {
  CHECK(chi(1, 3) == 1);
  CHECK(chi(3, 1) == 4);
  CHECK_THROWS_AS(chi(2, 2), DomainError);
}

TEST_CASE("theta_A and psi_A examples") {
  const PointedPermutation a = theta_A(P("3751642"), 3);
  CHECK(a.sigma == P("361542"));
  CHECK(a.point == GridPoint{3, 5});
  const PointedPermutation b = theta_A(P("12"), 2);
  CHECK(b.sigma == P("1"));
  CHECK(b.point == GridPoint{2, 2});
  CHECK(psi_A(P("361542"), {3, 5}) == PositionedPermutation{P("3751642"), 3});
  CHECK(psi_A(P("1"), {2, 2}) == PositionedPermutation{P("12"), 2});
}

TEST_CASE("property: theta_A and psi_A are mutually inverse for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for_each_permutation(PermKind::all, n, [n](const Permutation& pi) {
      for (int k = 1; k <= n; ++k) {
        const PointedPermutation img = theta_A(pi, k);
        CHECK(psi_A(img.sigma, img.point) == PositionedPermutation{pi, k});
      }
    });
  }
}

TEST_CASE("double insertion examples") {
  CHECK(xi(P("132"), {1, 3}) == P("42513"));
  CHECK(xi(P("1"), {1, 2}) == P("321"));
  CHECK(xi(P("132"), {3, 1}) == xi(P("132"), {1, 3}));
  CHECK(eta(P("213"), 2) == P("42315"));
  CHECK(eta_prime(P("213"), 4) == P("21354"));
  CHECK(eta(Permutation{}, 1) == P("12"));
  CHECK(xi_inv(P("42513"), {1, 3}) == P("132"));
  CHECK(eta_inv(P("42315"), 2) == P("213"));
  CHECK(eta_prime_inv(P("21354"), 4) == P("213"));
  CHECK_THROWS_AS(xi(P("132"), {2, 2}), DomainError);
  CHECK_THROWS_AS(eta_inv(P("42315"), 3), PreconditionError);
  CHECK_THROWS_AS(xi(P("231"), {1, 2}), PreconditionError);
}

TEST_CASE("property: double insertions keep involutions, place their squares and invert") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(PermKind::involutions, n, [n](const Permutation& pi) {
      for (int i = 1; i <= n + 1; ++i) {
        for (int j = 1; j <= n + 1; ++j) {
          if (i == j) continue;
          const Permutation s = xi(pi, {i, j});
          CHECK(is_involution(s));
          const int lo = std::min(i, j), hi = std::max(i, j);
          CHECK(s.at(lo) == hi + 1);
          CHECK(s.at(hi + 1) == lo);
          CHECK(xi_inv(s, {i, j}) == pi);
        }
        const Permutation e = eta(pi, i), ep = eta_prime(pi, i);
        CHECK(is_involution(e));
        CHECK(is_involution(ep));
        CHECK((e.at(i) == i && e.at(i + 1) == i + 1));
        CHECK((ep.at(i) == i + 1 && ep.at(i + 1) == i));
        CHECK(eta_inv(e, i) == pi);
        CHECK(eta_prime_inv(ep, i) == pi);
      }
    });
  }
}

TEST_CASE("theta_I reproduces the 42315 table") {
  // Rows 3 and 5 differ from the printed text: row 3's point is (3,3) as in
  // the published figure and the Theta formula, and row 5's element lies in
  // B1_{4,2} because des(4231) = 2.
  const Row rows[] = {
      {1, "123", {1, 3}, std::nullopt, "B5_1", {3, 0}},
      {2, "213", {2, 2}, std::nullopt, "B5_3", {3, 1}},
      {3, "3214", {3, 3}, std::nullopt, "B1", {4, 2}},
      {4, "123", {3, 1}, std::nullopt, "B5_2", {3, 0}},
      {5, "4231", {5, 5}, std::nullopt, "B1", {4, 2}},
  };
  for (const Row& r : rows) {
    const ThetaTrace t = theta_I(P("42315"), r.i);
    check_row(t, r);
    CHECK(psi_I(t.output) == PositionedPermutation{P("42315"), r.i});
  }
}

TEST_CASE("the printed 42315 rows 3 and 5 are not consistent") {
  // (3214, (2,2)) is not a B1 point; as a B1 element it would map to
  // (42315, 2), the image of (213, (2,2)).
  CHECK_FALSE(classify_B(P("3214"), {2, 2}, 1).has_value());
  CHECK(insert_square(P("3214"), {2, 2}) == P("42315"));
  CHECK(psi_I(theta_I(P("42315"), 2).output).position == 2);
  // B2_2 with subscript (4,1) would need a size-4 involution with one descent.
  CHECK(descents(P("4231")) == 2);
  CHECK_FALSE(classify_B(P("4231"), {5, 5}, 2).has_value());
}

TEST_CASE("theta_J reproduces the 532614 table") {
  const Row rows[] = {
      {1, "2143", {1, 4}, std::nullopt, "D2_1", {4, 2}},
      {2, "3412", {2, 2}, 1, "D5_1", {4, 1}},
      {3, "3412", {2, 2}, 2, "D5_2", {4, 1}},  // printed as 3413
      {4, "4321", {4, 5}, std::nullopt, "D1_1", {4, 3}},
      {5, "2143", {4, 1}, std::nullopt, "D2_2", {4, 2}},
      {6, "4321", {5, 4}, std::nullopt, "D1_2", {4, 3}},
  };
  for (const Row& r : rows) {
    const ThetaTrace t = theta_J(P("532614"), r.i);
    check_row(t, r);
    CHECK(psi_J(t.output) == PositionedPermutation{P("532614"), r.i});
  }
  CHECK(eta_prime_inv(P("532614"), 2) == P("3412"));
}

TEST_CASE("theta preconditions") {
  CHECK_THROWS_AS(theta_I(P("231"), 1), PreconditionError);
  CHECK_THROWS_AS(theta_I(P("21"), 1), DomainError);
  CHECK_THROWS_AS(theta_I(P("42315"), 6), DomainError);
  CHECK_THROWS_AS(theta_J(P("42315"), 1), PreconditionError);
  CHECK_THROWS_AS(theta_J(P("21"), 1), DomainError);
}

TEST_CASE("psi rejects elements outside their subset") {
  TaggedElement e{P("3214"), {2, 2}, std::nullopt, 1, SubsetLabel::parse("B1")};
  CHECK_THROWS_AS(psi_I(e), PreconditionError);
  TaggedElement d{P("3412"), {2, 2}, std::nullopt, 5, SubsetLabel::parse("D5_1")};
  CHECK_THROWS_AS(psi_J(d), PreconditionError);  // diagonal elements need a tag
}

TEST_CASE("subset labels") {
  CHECK(SubsetLabel::parse("B5_1") == SubsetLabel{'B', 5, 1});
  CHECK(SubsetLabel::parse("B1").str() == "B1");
  CHECK(SubsetLabel{'D', 3, 2}.str() == "D3_2");
  CHECK_THROWS(SubsetLabel::parse("C2"));
}

TEST_CASE("B set examples") {
  CHECK(build_B_sets(2, 1)[0].size() == 2);
  CHECK(build_B_sets(2, 0)[2].size() == 3);
  for (const auto& set : build_B_sets(3, -1)) CHECK(set.empty());
  CHECK_THROWS_AS(build_B_sets(0, 0), DomainError);
}

TEST_CASE("D set examples") {
  CHECK(build_D_sets(4, 1)[0].size() == 6);
  for (int k = 0; k < 5; ++k) {
    for (const auto& set : build_D_sets(5, k)) CHECK(set.empty());
  }
  for (int m = 2; m <= 8; m += 2) {
    for (int k = 0; k < m; ++k) {
      for (const auto& set : build_D_sets(m, k)) {
        for (const auto& e : set) CHECK(e.tag.has_value() == (e.point.row == e.point.col));
      }
    }
  }
}

TEST_CASE("property: set sizes follow the closed-form multipliers") {
  for (int n = 1; n <= 8; ++n) {
    std::map<int, long long> by_des;
    for_each_permutation(PermKind::involutions, n, [&](const Permutation& pi) { ++by_des[descents(pi)]; });
    for (int k = 0; k < n; ++k) {
      const auto sets = build_B_sets(n, k);
      const auto mult = B_set_multipliers(n, k);
      for (int f = 0; f < 5; ++f) CHECK(static_cast<long long>(sets[f].size()) == mult[f] * by_des[k]);
      for (int f = 0; f < 5; ++f) {
        for (const auto& e : sets[f]) {
          CHECK(e.family == f + 1);
          CHECK(classify_B(e.sigma, e.point, e.family) == e.label);
        }
      }
    }
  }
  for (int m = 2; m <= 10; m += 2) {
    std::map<int, long long> by_des;
    for_each_permutation(PermKind::ffi, m, [&](const Permutation& pi) { ++by_des[descents(pi)]; });
    for (int k = 0; k < m; ++k) {
      const auto sets = build_D_sets(m, k);
      const auto mult = D_set_multipliers(m, k);
      for (int f = 0; f < 5; ++f) CHECK(static_cast<long long>(sets[f].size()) == mult[f] * by_des[k]);
      for (const auto& set : sets) {
        for (const auto& e : set) CHECK(classify_D(e.sigma, e.point, e.tag) == e.label);
      }
    }
  }
}

TEST_CASE("property: theta_I and psi_I are mutually inverse for n <= 8") {
  for (int n = 3; n <= 8; ++n) {
    std::set<std::tuple<Permutation, GridPoint, int>> images;
    long long positions = 0;
    for_each_permutation(PermKind::involutions, n, [&](const Permutation& pi) {
      for (int i = 1; i <= n; ++i) {
        const ThetaTrace t = theta_I(pi, i);
        CHECK(psi_I(t.output) == PositionedPermutation{pi, i});
        images.insert({t.output.sigma, t.output.point, t.output.family});
        ++positions;
      }
    });
    CHECK(static_cast<long long>(images.size()) == positions);
  }
}

TEST_CASE("property: theta_J and psi_J are mutually inverse for sizes <= 10") {
  for (int m = 4; m <= 10; m += 2) {
    for_each_permutation(PermKind::ffi, m - 2, [&](const Permutation& sigma) {
      std::array<std::vector<TaggedElement>, 5> sets;
      append_D_elements(sigma, sets);
      for (const auto& set : sets) {
        for (const auto& e : set) {
          const PositionedPermutation img = psi_J(e);
          CHECK(is_fixed_point_free_involution(img.pi));
          CHECK(theta_J(img.pi, img.position).output == e);
        }
      }
    });
  }
}
