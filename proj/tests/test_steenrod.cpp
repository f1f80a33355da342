#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "einf/steenrod.hpp"
#include "support.hpp"

using namespace einf;

namespace {

using P = Permutation;

SimplicialElement simplicial_chain(int p, int s, int q, bool bockstein = false) {
  return std::get<SimplicialElement>(steenrod_chain({p, s, q, bockstein, ChainContext::simplicial}));
}

// Alternating (1,2,1,2,...) of the given length.
Surjection alternating(int length) {
  std::vector<int> v;
  for (int k = 0; k < length; ++k) v.push_back(k % 2 + 1);
  return Surjection(v);
}

}  // namespace

TEST_CASE("psi on the Barratt-Eccles operad") {
  CHECK(psi_barratt_eccles(3, 2) ==
        BarrattEcclesElement({{{P{1, 2, 3}, P{2, 3, 1}, P{3, 1, 2}}, 1},
                              {{P{1, 2, 3}, P{3, 1, 2}, P{1, 2, 3}}, 1}}));
  for (int r = 1; r <= 4; ++r)
    CHECK(psi_barratt_eccles(r, 0) == BarrattEcclesElement({{{P::identity(r)}, 1}}));
  CHECK(psi_barratt_eccles(2, 2) == BarrattEcclesElement({{{P{1, 2}, P{2, 1}, P{1, 2}}, 1}}));
  CHECK_THROWS_AS(psi_barratt_eccles(0, 1), InvalidValue);
  CHECK_THROWS_AS(psi_barratt_eccles(2, -1), InvalidValue);
}

TEST_CASE("psi on the surjection operad") {
  CHECK(psi_surjection(3, 2) == SurjectionElement({{Surjection{1, 2, 3, 1, 2}, 1},
                                                   {Surjection{1, 3, 1, 2, 3}, 1},
                                                   {Surjection{1, 2, 3, 2, 3}, 1}}));
  CHECK(psi_surjection(3, 0) == SurjectionElement({{Surjection{1, 2, 3}, 1}}));
  for (int i = 0; i <= 6; ++i) {
    const auto x = psi_surjection(2, i);
    REQUIRE(x.size() == 1);
    CHECK(x.begin()->first == alternating(i + 2));
    CHECK((x.begin()->second == 1 || x.begin()->second == -1));
  }
}

TEST_CASE("psi satisfies the resolution identities") {
  for (int r = 1; r <= 5; ++r) {
    const auto T = transfer_element(r), N = norm_element(r);
    for (int i = 0; i < 5; ++i) {
      const auto& step = i % 2 == 0 ? T : N;
      CHECK(boundary(psi_barratt_eccles(r, i + 1)) == step * psi_barratt_eccles(r, i));
      CHECK(boundary(psi_surjection(r, i + 1)) == step * psi_surjection(r, i));
    }
    for (int i = 0; i <= 5; ++i) {
      for (const auto& [s, c] : psi_barratt_eccles(r, i)) {
        CHECK(s.degree() == i);
        CHECK(s.arity() == r);
      }
      for (const auto& [u, c] : psi_surjection(r, i)) CHECK(u.length() == i + r);
    }
  }
}

TEST_CASE("psi cache is safe under concurrent readers") {
  std::vector<std::thread> pool;
  std::vector<SurjectionElement> results(8);
  for (std::size_t k = 0; k < results.size(); ++k)
    pool.emplace_back([&, k] { results[k] = psi_surjection(4, 4); });
  for (auto& t : pool) t.join();
  for (const auto& x : results) CHECK(x == results.front());
}

TEST_CASE("steenrod index") {
  CHECK(steenrod_index(2, -1, -3, false) == 2);
  CHECK(steenrod_index(3, -1, -3, true) == 1);
  CHECK(steenrod_index(3, -2, -4, false) == 0);
  CHECK_THROWS_AS(steenrod_index(2, 0, 0, true), DomainError);
  CHECK_THROWS_AS(steenrod_index(4, 0, 0, false), DomainError);
}

TEST_CASE("nu") {
  CHECK(nu(3, -3) == 1);
  CHECK(nu(3, -4) == 1);
  CHECK(nu(5, -2) == 4);
  // the factorial powers cancel, the two parity exponents add up to q^2 m
  for (int p : {3, 5, 7, 11})
    for (int q = -6; q <= 0; ++q) {
      const int m = (p - 1) / 2;
      CHECK((nu(p, q) * nu(p, -q)) % p == ((q * m) % 2 ? p - 1 : 1));
    }
  CHECK_THROWS_AS(nu(2, -1), DomainError);
  CHECK_THROWS_AS(nu(9, -1), DomainError);
}

TEST_CASE("request validation") {
  CHECK_THROWS_AS(steenrod_chain({2, -1, -3, true, ChainContext::simplicial}), DomainError);
  CHECK_THROWS_AS(steenrod_chain({6, -1, -3, false, ChainContext::simplicial}), DomainError);
  CHECK_THROWS_AS(steenrod_chain({2, -1, 1, false, ChainContext::simplicial}), DomainError);
}

TEST_CASE("steenrod chains") {
  CHECK(to_text(simplicial_chain(2, -1, -3)) ==
        "((0,1,2,3),(0,1,3,4)) + ((0,1,2,3),(1,2,3,4)) + ((0,1,3,4),(1,2,3,4)) + "
        "((0,2,3,4),(0,1,2,4))");
  CHECK(to_text(simplicial_chain(3, -1, -3, true)) ==
        "2((0,1,2,8),(2,3,4,5),(5,6,7,8)) + ((0,1,7,8),(1,2,3,4),(4,5,6,7)) + "
        "2((0,6,7,8),(0,1,2,3),(3,4,5,6))");
  CHECK(to_text(simplicial_chain(3, -2, -4)) == "((0,1,2,3,4),(4,5,6,7,8),(8,9,10,11,12))");
  const auto zero = simplicial_chain(2, -4, -3);
  CHECK(zero.is_zero());
  CHECK(zero.torsion() == Torsion(2));
  CHECK(simplicial_chain(3, -1, -3, true).torsion() == Torsion(3));
}

TEST_CASE("cubical steenrod chains") {
  const auto c = std::get<CubicalElement>(steenrod_chain({2, -1, -2, false, ChainContext::cubical}));
  CHECK(c.torsion() == Torsion(2));
  for (const auto& [key, v] : c) {
    CHECK(key.arity() == 2);
    CHECK(key.factor_degree(0) == 2);
    CHECK(key.factor_degree(1) == 2);
  }
  CHECK(!c.is_zero());
}

TEST_CASE("steenrod chains with s = 0") {
  // d = -q, so the standard cell has dimension -q as well
  for (int q = -1; q >= -3; --q) {
    const auto c = simplicial_chain(2, 0, q);
    CHECK(!c.is_zero());
    for (const auto& [key, v] : c) CHECK(key.degree() == -2 * q);
  }
}
