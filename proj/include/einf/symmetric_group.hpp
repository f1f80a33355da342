#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "einf/combination.hpp"

namespace einf {

// A bijection of {1..r}, stored as its value sequence (sigma(1), ..., sigma(r)).
class Permutation {
 public:
  Permutation() = default;  // the empty permutation of arity 0
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  static Permutation identity(int arity);

  int arity() const noexcept { return static_cast<int>(values_.size()); }
  // 1-based evaluation.
  int operator()(int k) const { return values_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& values() const noexcept { return values_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// (sigma * tau)(k) = sigma(tau(k)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

// +1 or -1 by parity of the inversion count.
int sign(const Permutation& sigma);

// Operadic composition in S: the value i of x is replaced by the block of
// y's values shifted up by i-1; values of x above i shift up by arity(y)-1.
Permutation compose(const Permutation& x, const Permutation& y, int i);

// rho = (2, 3, ..., r, 1).
Permutation cyclic_generator(int arity);

// Element of the group ring R[S_r]; every key has the same arity.
class SymmetricRingElement : public Combination<SymmetricRingElement, Permutation> {
 public:
  SymmetricRingElement() = default;
  explicit SymmetricRingElement(Torsion t) : Combination(t) {}
  SymmetricRingElement(std::initializer_list<std::pair<Permutation, Coefficient>> pairs,
                       Torsion t = Torsion{});
  explicit SymmetricRingElement(const FreeModuleElement<Permutation>& m);

  std::optional<int> arity() const;

  bool check_key(const Permutation& key) const;
  void require_compatible(const SymmetricRingElement&) const {}

  bool operator==(const SymmetricRingElement&) const = default;
};

// Bilinear extension of permutation composition.
SymmetricRingElement operator*(const SymmetricRingElement& x, const SymmetricRingElement& y);
SymmetricRingElement compose(const SymmetricRingElement& x, const SymmetricRingElement& y,
                             int i);

// T = rho - 1 and N = 1 + rho + ... + rho^{r-1} in R[C_r].
SymmetricRingElement transfer_element(int arity, Torsion t = Torsion{});
SymmetricRingElement norm_element(int arity, Torsion t = Torsion{});

}  // namespace einf
