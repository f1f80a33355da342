#pragma once

// Random generators and brute-force reference computations shared by the
// test binaries.  The references deliberately avoid the library's own
// algorithms.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "einf/barratt_eccles.hpp"
#include "einf/chains.hpp"
#include "einf/format.hpp"
#include "einf/surjection.hpp"
#include "einf/symmetric_group.hpp"

namespace testing {

using namespace einf;

inline constexpr int kTrials = 120;
inline const std::vector<long long> kTorsions = {0, 2, 3, 5};

struct Random {
  explicit Random(unsigned seed) : gen(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Coefficient coefficient() {
    int c = 0;
    while (c == 0) c = uniform(-9, 9);
    return c;
  }
  Torsion torsion() { return Torsion(kTorsions[static_cast<std::size_t>(uniform(0, 3))]); }
  Convention convention() {
    return uniform(0, 1) ? Convention::berger_fresse : Convention::mcclure_smith;
  }

  Permutation permutation(int r) {
    std::vector<int> v(static_cast<std::size_t>(r));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), gen);
    return Permutation(std::move(v));
  }

  // Non-degenerate surjection {1..r+d} -> {1..r}.
  Surjection surjection(int r, int d) {
    for (;;) {
      std::vector<int> v(static_cast<std::size_t>(r + d));
      for (auto& x : v) x = uniform(1, r);
      if (r == 1 && d > 0) return Surjection({1});
      Surjection u(v);
      if (!u.is_degenerate() && u.arity() == r) return u;
    }
  }

  SurjectionElement surjection_element(int r, int d, Convention c, Torsion t, int terms = 3) {
    SurjectionElement x(c, t);
    if (r == 1 && d > 0) return x;
    for (int k = 0; k < terms; ++k) x.add_term(surjection(r, d), coefficient());
    return x;
  }

  SymmetricRingElement ring_element(int r, Torsion t, int terms = 3) {
    SymmetricRingElement x(t);
    for (int k = 0; k < terms; ++k) x.add_term(permutation(r), coefficient());
    return x;
  }

  BarrattEcclesSimplex simplex(int r, int d) {
    for (;;) {
      std::vector<Permutation> coords;
      for (int k = 0; k <= d; ++k) coords.push_back(permutation(r));
      BarrattEcclesSimplex s(std::move(coords));
      if (!s.is_degenerate()) return s;
    }
  }

  BarrattEcclesElement be_element(int r, int d, Torsion t, int terms = 3) {
    BarrattEcclesElement x(t);
    if (r == 1 && d > 0) return x;
    for (int k = 0; k < terms; ++k) x.add_term(simplex(r, d), coefficient());
    return x;
  }

  std::vector<int> face(int n, int dim) {
    std::vector<int> all(static_cast<std::size_t>(n) + 1);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), gen);
    all.resize(static_cast<std::size_t>(dim) + 1);
    std::sort(all.begin(), all.end());
    return all;
  }

  SimplicialElement simplicial_element(int r, int n, Torsion t, int terms = 3) {
    SimplicialElement x(t);
    for (int k = 0; k < terms; ++k) {
      std::vector<std::vector<int>> fs;
      for (int j = 0; j < r; ++j) fs.push_back(face(n, uniform(0, n)));
      x.add_term(SimplexTensor(std::move(fs)), coefficient());
    }
    return x;
  }

  CubicalElement cubical_element(int r, int n, Torsion t, int terms = 3) {
    CubicalElement x(t);
    for (int k = 0; k < terms; ++k) {
      std::vector<std::vector<int>> fs(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(n)));
      for (auto& w : fs)
        for (auto& d : w) d = uniform(0, 2);
      x.add_term(CubeTensor(std::move(fs)), coefficient());
    }
    return x;
  }

  std::mt19937 gen;
};

namespace oracle {

// (sigma tau)(k) = sigma(tau(k)), straight from the definition.
inline std::vector<int> product(const std::vector<int>& sigma, const std::vector<int>& tau) {
  std::vector<int> out;
  for (int k : tau) out.push_back(sigma[static_cast<std::size_t>(k - 1)]);
  return out;
}

// Sign from the cycle decomposition: (-1)^(r - #cycles).
inline int sign_by_cycles(const std::vector<int>& sigma) {
  const std::size_t r = sigma.size();
  std::vector<bool> seen(r, false);
  int cycles = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(sigma[j] - 1)) seen[j] = true;
  }
  return (static_cast<int>(r) - cycles) % 2 ? -1 : 1;
}

// Koszul sign by bubble sort: swap adjacent items until the target order is
// reached, collecting (-1)^{|a||b|} per swap.
inline int koszul_by_swaps(const std::vector<int>& degrees, std::vector<int> order) {
  int s = 1;
  for (std::size_t pass = 0; pass < order.size(); ++pass)
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
      if (order[k] > order[k + 1]) {
        if (degrees[static_cast<std::size_t>(order[k])] % 2 &&
            degrees[static_cast<std::size_t>(order[k + 1])] % 2)
          s = -s;
        std::swap(order[k], order[k + 1]);
      }
  return s;
}

// Shuffles as subsets: choose which of the n+m steps move the first index.
// The sign is the sign of the (n,m)-shuffle permutation.
struct Shuffle {
  std::vector<int> first, second;
  int sign;
};

inline std::vector<Shuffle> shuffles(int n, int m) {
  std::vector<Shuffle> out;
  const int steps = n + m;
  for (unsigned mask = 0; mask < (1u << steps); ++mask) {
    if (__builtin_popcount(mask) != n) continue;
    Shuffle s{{0}, {0}, 1};
    std::vector<int> perm;  // horizontal steps take labels 0..n-1, vertical n..n+m-1
    int i = 0, j = 0;
    for (int k = 0; k < steps; ++k) {
      if (mask >> k & 1u) perm.push_back(i++);
      else perm.push_back(n + j++);
      s.first.push_back(i);
      s.second.push_back(j);
    }
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inversions;
    s.sign = inversions % 2 ? -1 : 1;
    out.push_back(std::move(s));
  }
  return out;
}

// Complexity of a surjection read off its binary subsequences: the number of
// value changes minus one.
inline int surjection_complexity(const std::vector<int>& u) {
  const int r = *std::max_element(u.begin(), u.end());
  int best = 0;
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      std::vector<int> sub;
      for (int v : u)
        if ((v == a || v == b) && (sub.empty() || sub.back() != v)) sub.push_back(v);
      best = std::max(best, static_cast<int>(sub.size()) - 2);
    }
  return best;
}

}  // namespace oracle

// Apply a linear map defined on basis keys.
template <typename Out, typename Element, typename Fn>
Out linear(const Element& x, Out zero, Fn&& f) {
  for (const auto& [key, c] : x) zero += f(key).scaled(c);
  return zero;
}

inline SurjectionElement basis(const Surjection& u, Convention c, Torsion t) {
  SurjectionElement x(c, t);
  x.add_term(u, 1);
  return x;
}

inline BarrattEcclesElement basis(const BarrattEcclesSimplex& s, Torsion t) {
  BarrattEcclesElement x(t);
  x.add_term(s, 1);
  return x;
}

}  // namespace testing
