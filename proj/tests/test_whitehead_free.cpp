#include "doctest.h"

#include "oracle.hpp"
#include "test_support.hpp"
#include "whp/stallings.hpp"
#include "whp/whitehead_free.hpp"

#include <algorithm>

using namespace whp;
using namespace whp::testing;

TEST_CASE("enumerate_whitehead_auts counts") {
  const auto& two = enumerate_whitehead_auts(2);
  CHECK(std::count_if(two.begin(), two.end(), [](const WhiteheadAut& t) { return t.is_permutation(); }) == 8);
  CHECK(std::count_if(two.begin(), two.end(), [](const WhiteheadAut& t) { return !t.is_permutation(); }) == 12);
  CHECK(two.front().images() == identity_images(2));
  const auto& one = enumerate_whitehead_auts(1);
  CHECK(one.size() == 2);
  const auto& three = enumerate_whitehead_auts(3);
  // 2^3 3! permutations; each of 6 letters with 2^4 - 1 nonempty extra subsets.
  CHECK(three.size() == 48 + 6 * 15);
}

TEST_CASE("every Whitehead automorphism is a basis change and inverts") {
  for (int n = 1; n <= 3; ++n) {
    for (const WhiteheadAut& t : enumerate_whitehead_auts(n)) {
      CHECK(is_injective_endo(t.images(), n));
      CHECK(is_surjective_endo(t.images(), n));
      CHECK(compose_images(t.images(), t.inverse().images()) == identity_images(n));
    }
  }
}

TEST_CASE("enumeration matches the independent rebuild") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<FreeImages> lib;
    for (const WhiteheadAut& t : enumerate_whitehead_auts(n)) lib.push_back(t.images());
    auto ref = oracle::whitehead_images(n);
    auto by_str = [](const FreeImages& a, const FreeImages& b) { return to_string(a) < to_string(b); };
    std::sort(lib.begin(), lib.end(), by_str);
    std::sort(ref.begin(), ref.end(), by_str);
    CHECK(lib == ref);
  }
}

TEST_CASE("apply_aut") {
  const WhiteheadAut mult(Multiplier{1, {1, 2}}, 2);
  CHECK(apply_aut(mult, W("x2")) == W("x2 x1"));
  CHECK(apply_aut(mult, W("x1")) == W("x1"));
  const WhiteheadAut swap(SignedPermutation{{2, 1}, {1, 1}}, 2);
  CHECK(apply_aut(swap, W("x1 X2")) == W("x2 X1"));
  for (const WhiteheadAut& t : enumerate_whitehead_auts(2)) CHECK(apply_aut(t, FreeWord(2)).is_identity());
  const WhiteheadAut both(Multiplier{1, {1, 2, -2}}, 2);
  CHECK(apply_aut(both, W("x2")) == W("X1 x2 x1"));
  const WhiteheadAut left(Multiplier{1, {1, -2}}, 2);
  CHECK(apply_aut(left, W("x2")) == W("X1 x2"));
  CHECK_THROWS(WhiteheadAut(Multiplier{1, {1, -1}}, 2));
  CHECK_THROWS(WhiteheadAut(Multiplier{1, {2}}, 2));
}

TEST_CASE("minimize_cyclic") {
  auto r = minimize_cyclic(W("x1 x2 X1"));
  CHECK(r.min.word() == W("x2"));
  CHECK(r.trace.empty());
  r = minimize_cyclic(W("x1 x2 x1"));
  CHECK(r.min.size() == 1);
  r = minimize_cyclic(W("x1"));
  CHECK(r.min.word() == W("x1"));
  CHECK(r.trace.empty());
  CHECK(minimize_cyclic(W("x1 x2 X1 X2")).min.size() == 4);
  CHECK(minimize_cyclic(FreeWord(2)).min.size() == 0);
}

TEST_CASE("minimization trace replays with strictly decreasing cyclic length") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const FreeWord w = random_word(rng, 2, 10);
    const Minimization r = minimize_cyclic(w);
    FreeWord cur = cyclic_reduce(w).core;
    for (const WhiteheadAut& t : r.trace) {
      const FreeWord next = cyclic_reduce(apply_aut(t, cur)).core;
      CHECK(next.size() < cur.size());
      cur = next;
    }
    CHECK(CyclicWord(cur) == r.min);
  }
}

TEST_CASE("minimal length does not depend on which decreasing step is taken") {
  std::mt19937 rng(32);
  const auto& auts = enumerate_whitehead_auts(2);
  for (int trial = 0; trial < 300; ++trial) {
    const FreeWord w = random_word(rng, 2, 6);
    FreeWord cur = cyclic_reduce(w).core;
    while (true) {
      std::vector<FreeWord> down;
      for (const WhiteheadAut& t : auts) {
        FreeWord next = cyclic_reduce(apply_aut(t, cur)).core;
        if (next.size() < cur.size()) down.push_back(std::move(next));
      }
      if (down.empty()) break;
      cur = down[std::uniform_int_distribution<std::size_t>(0, down.size() - 1)(rng)];
    }
    CHECK(cur.size() == minimize_cyclic(w).min.size());
  }
}

TEST_CASE("aut_equivalent examples") {
  auto phi = aut_equivalent(W("x1"), W("x2"));
  REQUIRE(phi);
  CHECK(apply_images(*phi, W("x1")) == W("x2"));
  phi = aut_equivalent(W("x1 x2 X1"), W("x2"));
  REQUIRE(phi);
  CHECK(apply_images(*phi, W("x1 x2 X1")) == W("x2"));
  CHECK_FALSE(aut_equivalent(W("x1"), W("x1^2")));
  CHECK(aut_equivalent(FreeWord(2), FreeWord(2)));
  CHECK_FALSE(aut_equivalent(FreeWord(2), W("x1")));
  CHECK_FALSE(aut_equivalent(W("x1 x2 X1 X2"), W("x1^2 x2^2")));
  phi = aut_equivalent(W("x1 x2 X1 X2"), W("x2 x1 X2 X1"));
  REQUIRE(phi);
  CHECK(apply_images(*phi, W("x1 x2 X1 X2")) == W("x2 x1 X2 X1"));
}

TEST_CASE("aut_equivalent is reflexive and symmetric with exact witnesses") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord u = random_word(rng, 2, 7);
    const auto self = aut_equivalent(u, u);
    REQUIRE(self);
    CHECK(apply_images(*self, u) == u);

    // v = u under a random automorphism, then conjugated.
    FreeImages psi = identity_images(2);
    const auto& auts = enumerate_whitehead_auts(2);
    for (int k = 0; k < 4; ++k)
      psi = compose_images(psi, auts[std::uniform_int_distribution<std::size_t>(0, auts.size() - 1)(rng)].images());
    const FreeWord c = random_word(rng, 2, 3);
    const FreeWord v = c.inverse() * apply_images(psi, u) * c;
    const auto there = aut_equivalent(u, v);
    const auto back = aut_equivalent(v, u);
    REQUIRE(there);
    REQUIRE(back);
    CHECK(apply_images(*there, u) == v);
    CHECK(apply_images(*back, v) == u);
    CHECK(is_injective_endo(*there, 2));
    CHECK(is_surjective_endo(*there, 2));
  }
}

TEST_CASE("aut_equivalent agrees with orbit search on short words") {
  const oracle::CyclicOrbits orbits(2, 7);
  const auto words = oracle::enumerate_words(2, 5);
  std::vector<FreeWord> classes;
  for (const FreeWord& w : words) classes.push_back(oracle::cyclic_canonical(w));
  std::sort(classes.begin(), classes.end(), ShortlexLess{});
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  int discrepancies = 0;
  for (std::size_t i = 0; i < classes.size(); i += 3)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const bool expected = orbits.component(classes[i]) == orbits.component(classes[j]);
      const auto phi = aut_equivalent(classes[i], classes[j]);
      if (phi.has_value() != expected) ++discrepancies;
      if (phi) CHECK(apply_images(*phi, classes[i]) == classes[j]);
    }
  CHECK(discrepancies == 0);
}

TEST_CASE("is_primitive") {
  auto p = is_primitive(W("x1 x2"));
  CHECK(p.primitive);
  REQUIRE(p.witness);
  CHECK(apply_images(*p.witness, W("x1 x2")) == W("x1"));
  CHECK_FALSE(is_primitive(W("x1^2")).primitive);
  CHECK_FALSE(is_primitive(W("x1 x2 X1 X2")).primitive);
  CHECK(is_primitive(W("x1 x2 x1 x2 x2")).primitive);
  CHECK_THROWS_AS(is_primitive(FreeWord(2)), std::invalid_argument);
}

TEST_CASE("orbit oracle examples") {
  auto orbit = oracle::brute_aut_orbit(W("x1"), 1);
  CHECK(orbit.size() == 4);
  CHECK_FALSE(orbit.count(FreeWord(2)));
  orbit = oracle::brute_aut_orbit(W("x1^2"), 2);
  CHECK(std::none_of(orbit.begin(), orbit.end(), [](const FreeWord& w) { return w.size() == 1; }));
  CHECK(oracle::brute_aut_orbit(FreeWord(2), 3).size() == 1);
}
