#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "permgrid/enumerate.hpp"
#include "permgrid/error.hpp"
#include "permgrid/permutation.hpp"

using namespace permgrid;

TEST_CASE("parse accepts compact and comma forms") {
  CHECK(Permutation::parse("316524") == Permutation{3, 1, 6, 5, 2, 4});
  CHECK(Permutation::parse("3,1,6,5,2,4") == Permutation{3, 1, 6, 5, 2, 4});
  CHECK(Permutation::parse(" 10,1,2,3,4,5,6,7,8,9 ").size() == 10);
  CHECK(Permutation::parse("264135").str() == "2,6,4,1,3,5");
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation::parse("1123"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,x,3"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), PreconditionError);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::parse("264135")) == Permutation::parse("415362"));
  CHECK(inverse(Permutation::parse("316524")) == Permutation::parse("251643"));
  for (int n = 0; n <= 7; ++n) CHECK(inverse(Permutation::identity(n)) == Permutation::identity(n));
}

TEST_CASE("descent statistics") {
  CHECK(descent_profile(Permutation::parse("264135")) == DescentProfile{2, 3});
  CHECK(descent_profile(Permutation::identity(6)) == DescentProfile{0, 0});
  CHECK(descent_profile(Permutation::parse("42513")) == DescentProfile{2, 2});
  CHECK(descent_profile(Permutation{}) == DescentProfile{0, 0});
  CHECK(descent_profile(Permutation{1}) == DescentProfile{0, 0});
  CHECK(descent_profile(Permutation::decreasing(5)) == DescentProfile{4, 4});
}

TEST_CASE("involution predicates") {
  CHECK(is_involution(Permutation::parse("42513")));
  CHECK_FALSE(is_fixed_point_free_involution(Permutation::parse("42513")));
  CHECK(is_fixed_point_free_involution(Permutation::parse("532614")));
  CHECK_FALSE(is_involution(Permutation::parse("231")));
  CHECK_FALSE(is_fixed_point_free_involution(Permutation::parse("231")));
}

TEST_CASE("property: inverse is an involution on S_n and swaps the profile") {
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(PermKind::all, n, [n](const Permutation& pi) {
      const Permutation inv = inverse(pi);
      CHECK(inverse(inv) == pi);
      const DescentProfile a = descent_profile(pi), b = descent_profile(inv);
      CHECK(a.des == b.ides);
      CHECK(a.ides == b.des);
      CHECK(a.des <= std::max(0, n - 1));
      CHECK(is_involution(pi) == (inv == pi));
    });
  }
}

TEST_CASE("enumeration sizes") {
  CHECK(collect(PermKind::all, 3).size() == 6);
  CHECK(collect(PermKind::involutions, 4).size() == 10);
  CHECK(collect(PermKind::ffi, 5).empty());
  CHECK(collect(PermKind::all, 0).size() == 1);
}

TEST_CASE("involution counts follow the telephone numbers") {
  const long long telephone[] = {1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496, 35696, 140152};
  for (int n = 1; n <= 12; ++n) {
    long long count = 0;
    for_each_permutation(PermKind::involutions, n, [&](const Permutation&) { ++count; });
    CHECK(count == telephone[n - 1]);
  }
  const long long double_factorial[] = {1, 3, 15, 105, 945, 10395, 135135};
  for (int m = 1; m <= 7; ++m) {
    long long count = 0;
    for_each_permutation(PermKind::ffi, 2 * m, [&](const Permutation&) { ++count; });
    CHECK(count == double_factorial[m - 1]);
  }
}

TEST_CASE("streams are lexicographic and match a filter of S_n") {
  for (PermKind kind : {PermKind::all, PermKind::involutions, PermKind::ffi}) {
    for (int n = 1; n <= 7; ++n) {
      const auto items = collect(kind, n);
      CHECK(std::is_sorted(items.begin(), items.end()));
      CHECK(std::set<Permutation>(items.begin(), items.end()).size() == items.size());
      std::size_t filtered = 0;
      for_each_permutation(PermKind::all, n, [&](const Permutation& pi) { filtered += matches_kind(kind, pi); });
      CHECK(filtered == items.size());
      for (const auto& pi : items) CHECK(matches_kind(kind, pi));
    }
  }
}

TEST_CASE("sharding by first value concatenates to the full stream") {
  for (PermKind kind : {PermKind::all, PermKind::involutions, PermKind::ffi}) {
    for (int n = 1; n <= 6; ++n) {
      std::vector<Permutation> joined;
      for (int first = 1; first <= n; ++first) {
        for (auto& pi : collect(kind, n, first)) {
          CHECK(pi.at(1) == first);
          joined.push_back(pi);
        }
      }
      CHECK(joined == collect(kind, n));
    }
  }
}

TEST_CASE("perm kind names round-trip") {
  for (PermKind k : {PermKind::all, PermKind::involutions, PermKind::ffi}) CHECK(parse_perm_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_perm_kind("signed"), ParseError);
}
