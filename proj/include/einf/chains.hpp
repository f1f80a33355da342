#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "einf/combination.hpp"
#include "einf/surjection.hpp"

namespace einf {

// Tensor product of faces of the standard simplex Delta^infinity; each factor
// is the (increasing) vertex sequence of a face.
class SimplexTensor {
 public:
  SimplexTensor() = default;
  explicit SimplexTensor(std::vector<std::vector<int>> factors);
  SimplexTensor(std::initializer_list<std::vector<int>> factors)
      : SimplexTensor(std::vector<std::vector<int>>(factors)) {}

  const std::vector<std::vector<int>>& factors() const noexcept { return factors_; }
  int arity() const noexcept { return static_cast<int>(factors_.size()); }
  int degree() const noexcept;
  int factor_degree(std::size_t k) const noexcept {
    return static_cast<int>(factors_[k].size()) - 1;
  }
  bool is_degenerate() const noexcept;

  auto operator<=>(const SimplexTensor&) const = default;

 private:
  std::vector<std::vector<int>> factors_;
};

// Tensor product of cells of the standard cube I^n.  Each factor is a word
// over {0, 1, 2}: 0 and 1 are the endpoints of a coordinate, 2 the full
// interval.
class CubeTensor {
 public:
  CubeTensor() = default;
  explicit CubeTensor(std::vector<std::vector<int>> factors);
  CubeTensor(std::initializer_list<std::vector<int>> factors)
      : CubeTensor(std::vector<std::vector<int>>(factors)) {}

  const std::vector<std::vector<int>>& factors() const noexcept { return factors_; }
  int arity() const noexcept { return static_cast<int>(factors_.size()); }
  int degree() const noexcept;
  int factor_degree(std::size_t k) const noexcept;
  bool is_degenerate() const noexcept { return false; }

  auto operator<=>(const CubeTensor&) const = default;

 private:
  std::vector<std::vector<int>> factors_;
};

class SimplicialElement : public Combination<SimplicialElement, SimplexTensor> {
 public:
  SimplicialElement() = default;
  explicit SimplicialElement(Torsion t) : Combination(t) {}
  SimplicialElement(std::initializer_list<std::pair<SimplexTensor, Coefficient>> pairs,
                    Torsion t = Torsion{});

  std::optional<int> arity() const;
  bool check_key(const SimplexTensor& key) const;
  void require_compatible(const SimplicialElement&) const {}

  bool operator==(const SimplicialElement&) const = default;
};

class CubicalElement : public Combination<CubicalElement, CubeTensor> {
 public:
  CubicalElement() = default;
  explicit CubicalElement(Torsion t) : Combination(t) {}
  CubicalElement(std::initializer_list<std::pair<CubeTensor, Coefficient>> pairs,
                 Torsion t = Torsion{});

  std::optional<int> arity() const;
  bool check_key(const CubeTensor& key) const;
  void require_compatible(const CubicalElement&) const {}

  bool operator==(const CubicalElement&) const = default;
};

// The top cell [0, ..., n] (resp. [0,1]^n) as an arity-one element.
SimplicialElement standard_simplex(int n, Torsion t = Torsion{});
CubicalElement standard_cube(int n, Torsion t = Torsion{});

// Differentials with the Koszul sign rule across tensor factors.
SimplicialElement boundary(const SimplicialElement& e);
CubicalElement boundary(const CubicalElement& e);

// Action of surjections on normalized chains.  The chain argument must have
// arity one; the action is natural, so faces act through the standard cell.
SimplicialElement act(const SurjectionElement& x, const SimplicialElement& chain);
CubicalElement act(const SurjectionElement& x, const CubicalElement& chain);
SimplicialElement act_simplicial(const SurjectionElement& x, int n);
CubicalElement act_cubical(const SurjectionElement& x, int n);

// (id^{i-1} (x) x (x) id^{r-i}) applied to e, with the Koszul sign of x
// passing the first i-1 factors.
SimplicialElement act_on_factor(const SurjectionElement& x, const SimplicialElement& e, int i);
CubicalElement act_on_factor(const SurjectionElement& x, const CubicalElement& e, int i);

// Left action of S_r by permuting tensor factors: factor k moves to slot
// sigma(k), with the Koszul sign.
SimplicialElement permute_factors(const Permutation& sigma, const SimplicialElement& e);
CubicalElement permute_factors(const Permutation& sigma, const CubicalElement& e);

enum class ChainFormat { text, latex };

std::string render(const SimplicialElement& e, ChainFormat format);
std::string render(const CubicalElement& e, ChainFormat format);

}  // namespace einf
