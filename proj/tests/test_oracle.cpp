#include "doctest.h"

#include "oracle.hpp"
#include "test_support.hpp"
#include "whp/decider.hpp"

#include <algorithm>

using namespace whp;
using namespace whp::testing;

TEST_CASE("enumerate_words") {
  CHECK(oracle::enumerate_words(2, 0).size() == 1);
  CHECK(oracle::enumerate_words(1, 3).size() == 7);
  // 1 + 4 + 4*3.
  const auto two = oracle::enumerate_words(2, 2);
  CHECK(two.size() == 17);
  CHECK(std::is_sorted(two.begin(), two.end(), ShortlexLess{}));
  CHECK(std::adjacent_find(two.begin(), two.end()) == two.end());
  CHECK(oracle::enumerate_words(3, 3).size() == 1 + 6 + 30 + 150);
}

TEST_CASE("cyclic_canonical") {
  CHECK(oracle::cyclic_canonical(W("x2 x1 X2")) == W("x1"));
  CHECK(oracle::cyclic_canonical(W("x2 x1")) == W("x1 x2"));
  CHECK(oracle::cyclic_canonical(W("X2 x1 x1 x2")) == W("x1 x1"));
}

TEST_CASE("orbits") {
  const oracle::CyclicOrbits orbits(2, 4);
  CHECK(orbits.component(W("x1")) == orbits.component(W("x2 x1")));
  CHECK(orbits.component(W("x1")) != orbits.component(W("x1^2")));
  CHECK(orbits.component(W("x1 x2 X1 X2")) == orbits.component(W("x2 x1 X2 X1")));
  CHECK(orbits.component(W("x1 x2 X1 X2")) != orbits.component(W("x1^2 x2^2")));
  CHECK_THROWS_AS(orbits.component(W("x1^5")), std::out_of_range);
}

TEST_CASE("brute_morphism_search examples") {
  const auto t2 = oracle::brute_morphism_search(E("(1; 1)"), E("(0; x1^5)"), Family::Endo, {3, 5});
  REQUIRE(t2);
  CHECK(apply_endo(*t2, E("(1; 1)")) == E("(0; x1^5)"));
  CHECK_FALSE(oracle::brute_morphism_search(E("(1; 1)"), E("(0; x1^5)"), Family::Mono, {3, 5}));
  CHECK_FALSE(oracle::brute_morphism_search(E("(0; x1)"), E("(0; x1^2)"), Family::Auto, {3, 3}));
  const auto id = oracle::brute_morphism_search(E("(2; x1 X2)"), E("(2; x1 X2)"), Family::Auto, {3, 3});
  REQUIRE(id);
  CHECK(verify(*id, E("(2; x1 X2)"), E("(2; x1 X2)"), Family::Auto));
}

TEST_CASE("brute abelian helpers agree with each other") {
  for (int a = -2; a <= 2; ++a)
    for (int u = -2; u <= 2; ++u)
      for (int b = -3; b <= 3; ++b)
        for (Family f : {Family::Endo, Family::Mono, Family::Auto}) {
          const bool exists = oracle::brute_abelian_exists({a}, {u, 0}, {b}, f, 3);
          const auto w = oracle::brute_abelian(V({a}), V({u, 0}), V({b}), f, 3);
          CHECK(exists == w.has_value());
        }
}

TEST_CASE("brute_gcd_representative") {
  CHECK(oracle::brute_gcd_representative({2, 3}, 6));
  CHECK_FALSE(oracle::brute_gcd_representative({2, 4}, 6));
  CHECK(oracle::brute_gcd_representative({5}, 6));
  CHECK_FALSE(oracle::brute_gcd_representative({3}, 6));
}
