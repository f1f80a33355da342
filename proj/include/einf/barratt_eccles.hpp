#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "einf/combination.hpp"
#include "einf/surjection.hpp"
#include "einf/symmetric_group.hpp"

namespace einf {

// An n-simplex (sigma_0, ..., sigma_n) of E(S_r).
class BarrattEcclesSimplex {
 public:
  BarrattEcclesSimplex() = default;
  explicit BarrattEcclesSimplex(std::vector<Permutation> coordinates);
  BarrattEcclesSimplex(std::initializer_list<Permutation> coordinates)
      : BarrattEcclesSimplex(std::vector<Permutation>(coordinates)) {}

  const std::vector<Permutation>& coordinates() const noexcept { return coords_; }
  const Permutation& operator[](std::size_t k) const { return coords_[k]; }
  int arity() const noexcept { return coords_.front().arity(); }
  int degree() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  bool is_degenerate() const noexcept;

  auto operator<=>(const BarrattEcclesSimplex&) const = default;

 private:
  std::vector<Permutation> coords_;
};

class BarrattEcclesElement : public Combination<BarrattEcclesElement, BarrattEcclesSimplex> {
 public:
  BarrattEcclesElement() = default;
  explicit BarrattEcclesElement(Torsion t) : Combination(t) {}
  BarrattEcclesElement(std::initializer_list<std::pair<BarrattEcclesSimplex, Coefficient>> pairs,
                       Torsion t = Torsion{});

  std::optional<int> arity() const;
  std::optional<int> degree() const;

  bool check_key(const BarrattEcclesSimplex& key) const;
  void require_compatible(const BarrattEcclesElement&) const {}

  bool operator==(const BarrattEcclesElement&) const = default;
};

// Tensor square basis, used for the diagonal.
using BarrattEcclesPair = std::pair<BarrattEcclesSimplex, BarrattEcclesSimplex>;
using BarrattEcclesTensor = FreeModuleElement<BarrattEcclesPair>;

BarrattEcclesElement boundary(const BarrattEcclesElement& x);

// A monotone lattice path from (0,0) to (n,m): the k-th vertex of the product
// simplex is (first[k], second[k]).  sign is the shuffle sign.
struct ShufflePath {
  std::vector<int> first;
  std::vector<int> second;
  int sign = 1;
};

std::vector<ShufflePath> shuffle_paths(int n, int m);

// Eilenberg-Zilber map on a pair of simplices: the signed sum of the
// nondegenerate simplices of the product, as pairs of coordinate sequences.
FreeModuleElement<std::pair<std::vector<Permutation>, std::vector<Permutation>>>
eilenberg_zilber(const BarrattEcclesSimplex& a, const BarrattEcclesSimplex& b);

BarrattEcclesElement compose(const BarrattEcclesElement& x, const BarrattEcclesElement& y,
                             int i);

// Alexander-Whitney diagonal.
BarrattEcclesTensor diagonal(const BarrattEcclesElement& x);

// Boundary of the tensor square with the Koszul sign on the second factor.
BarrattEcclesTensor boundary(const BarrattEcclesTensor& t);

// Coordinatewise left multiplication.
BarrattEcclesElement operator*(const SymmetricRingElement& pi, const BarrattEcclesElement& x);

// Maximum over keys and value pairs {a, b} of the number of times the
// relative order of a and b changes along sigma_0, ..., sigma_n.
int complexity(const BarrattEcclesElement& x);

// Table reduction E -> X, landing in the Berger-Fresse convention.
SurjectionElement table_reduction(const BarrattEcclesElement& x);

}  // namespace einf
