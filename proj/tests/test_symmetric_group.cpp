#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace einf;
using testing::Random;

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), InvalidValue);
  CHECK_THROWS_AS(Permutation({0, 1}), InvalidValue);
  CHECK_THROWS_AS(Permutation({1, 3}), InvalidValue);
  CHECK(Permutation::identity(3) == Permutation({1, 2, 3}));
}

TEST_CASE("product of permutations") {
  CHECK(Permutation({2, 3, 1}) * Permutation({1, 3, 2}) == Permutation({2, 1, 3}));
  const Permutation s{3, 1, 2};
  CHECK(Permutation::identity(3) * s == s);
  CHECK(Permutation({2, 1}) * Permutation({2, 1}) == Permutation({1, 2}));
  CHECK_THROWS_AS(Permutation({2, 1}) * s, ArityMismatch);
}

TEST_CASE("sign") {
  CHECK(sign(Permutation({1, 2, 3})) == 1);
  CHECK(sign(Permutation({2, 1, 3})) == -1);
  CHECK(sign(Permutation({2, 3, 1})) == 1);
}

TEST_CASE("ring product") {
  const SymmetricRingElement x({{Permutation{2, 3, 1}, -1}, {Permutation{1, 3, 2}, 1}});
  const SymmetricRingElement y({{Permutation{1, 3, 2}, 1}, {Permutation{1, 2, 3}, 2}});
  const SymmetricRingElement expected({{Permutation{2, 1, 3}, -1},
                                       {Permutation{2, 3, 1}, -2},
                                       {Permutation{1, 2, 3}, 1},
                                       {Permutation{1, 3, 2}, 2}});
  CHECK(x * y == expected);
  CHECK(to_text(x * y) == "(1,2,3) + 2(1,3,2) - (2,1,3) - 2(2,3,1)");
  CHECK(x * SymmetricRingElement({{Permutation::identity(3), 1}}) == x);
  const SymmetricRingElement t({{Permutation{2, 1}, 1}});
  CHECK(t * t == SymmetricRingElement({{Permutation{1, 2}, 1}}));
}

TEST_CASE("operadic composition") {
  const SymmetricRingElement x({{Permutation{2, 3, 1}, -1}, {Permutation{1, 3, 2}, 1}});
  const SymmetricRingElement y({{Permutation{1, 3, 2}, 1}, {Permutation{1, 2, 3}, 2}});
  const SymmetricRingElement expected({{Permutation{2, 4, 3, 5, 1}, -1},
                                       {Permutation{2, 3, 4, 5, 1}, -2},
                                       {Permutation{1, 5, 2, 4, 3}, 1},
                                       {Permutation{1, 5, 2, 3, 4}, 2}});
  CHECK(compose(x, y, 2) == expected);
  CHECK(compose(Permutation{1, 2}, Permutation{2, 1}, 2) == Permutation({1, 3, 2}));
  const Permutation s{3, 1, 2};
  for (int i = 1; i <= 3; ++i) CHECK(compose(s, Permutation::identity(1), i) == s);
  CHECK(compose(Permutation::identity(1), s, 1) == s);
  CHECK_THROWS_AS(compose(s, s, 4), IndexOutOfRange);
  CHECK_THROWS_AS(compose(s, s, 0), IndexOutOfRange);
}

TEST_CASE("cyclic elements") {
  CHECK(cyclic_generator(3) == Permutation({2, 3, 1}));
  CHECK(transfer_element(2) == SymmetricRingElement({{Permutation{2, 1}, 1}, {Permutation{1, 2}, -1}}));
  CHECK(norm_element(3) == SymmetricRingElement({{Permutation{1, 2, 3}, 1},
                                                 {Permutation{2, 3, 1}, 1},
                                                 {Permutation{3, 1, 2}, 1}}));
  for (int r = 1; r <= 6; ++r) {
    CHECK((norm_element(r) * transfer_element(r)).is_zero());
    CHECK((transfer_element(r) * norm_element(r)).is_zero());
  }
}

TEST_CASE("product and sign against the definitions") {
  Random rng(21);
  for (int trial = 0; trial < testing::kTrials; ++trial) {
    const int r = rng.uniform(1, 6);
    const auto s = rng.permutation(r), t = rng.permutation(r);
    CHECK((s * t).values() == testing::oracle::product(s.values(), t.values()));
    CHECK(sign(s) == testing::oracle::sign_by_cycles(s.values()));
    CHECK(sign(s * t) == sign(s) * sign(t));
    CHECK((s * s.inverse()).is_identity());
  }
}

TEST_CASE("ring product is associative and unital") {
  Random rng(22);
  for (int trial = 0; trial < testing::kTrials; ++trial) {
    const int r = rng.uniform(1, 4);
    const Torsion t = rng.torsion();
    const auto a = rng.ring_element(r, t), b = rng.ring_element(r, t), c = rng.ring_element(r, t);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * SymmetricRingElement({{Permutation::identity(r), 1}}, t) == a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("operad axioms on permutations") {
  Random rng(23);
  for (int trial = 0; trial < testing::kTrials; ++trial) {
    const int r = rng.uniform(1, 4), s = rng.uniform(1, 4), u = rng.uniform(1, 4);
    const auto x = rng.permutation(r), y = rng.permutation(s), z = rng.permutation(u);
    const int i = rng.uniform(1, r), j = rng.uniform(1, s);
    // sequential
    CHECK(compose(compose(x, y, i), z, i + j - 1) == compose(x, compose(y, z, j), i));
    // parallel: slots i < k of x
    if (r >= 2) {
      const int a = rng.uniform(1, r - 1), b = rng.uniform(a + 1, r);
      CHECK(compose(compose(x, y, b), z, a) == compose(compose(x, z, a), y, b + u - 1));
    }
  }
}
