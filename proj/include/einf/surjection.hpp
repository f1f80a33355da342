#pragma once

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "einf/combination.hpp"
#include "einf/symmetric_group.hpp"

namespace einf {

// Sign conventions for the surjection operad.
//
// Both are realized through the same interval-cut action; they differ only in
// how the degree-one "caesuras" (positions whose value occurs again later) are
// ordered: Berger-Fresse orders them by position, McClure-Smith groups them by
// value.  The two conventions are related by the basis-wise sign of that
// reordering, see with_convention().
enum class Convention { berger_fresse, mcclure_smith };

std::string_view to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view name);

// A function {1..d+r} -> {1..r}, stored as its value sequence.
class Surjection {
 public:
  Surjection() = default;
  explicit Surjection(std::vector<int> values);
  Surjection(std::initializer_list<int> values) : Surjection(std::vector<int>(values)) {}

  const std::vector<int>& values() const noexcept { return values_; }
  int length() const noexcept { return static_cast<int>(values_.size()); }
  int arity() const noexcept { return arity_; }
  int degree() const noexcept { return length() - arity_; }

  // Non-surjective onto {1..arity} or with two equal adjacent values.
  bool is_degenerate() const noexcept;

  // 0-based positions whose value occurs again later in the sequence.
  std::vector<int> caesuras() const;

  auto operator<=>(const Surjection& other) const { return values_ <=> other.values_; }
  bool operator==(const Surjection& other) const { return values_ == other.values_; }

 private:
  std::vector<int> values_;
  int arity_ = 0;
};

class SurjectionElement : public Combination<SurjectionElement, Surjection> {
 public:
  SurjectionElement() = default;
  explicit SurjectionElement(Convention c, Torsion t = Torsion{})
      : Combination(t), convention_(c) {}
  SurjectionElement(std::initializer_list<std::pair<Surjection, Coefficient>> pairs,
                    Convention c = Convention::berger_fresse, Torsion t = Torsion{});

  Convention convention() const noexcept { return convention_; }
  std::optional<int> arity() const;
  std::optional<int> degree() const;

  bool check_key(const Surjection& key) const;
  void require_compatible(const SurjectionElement& other) const;

  bool operator==(const SurjectionElement&) const = default;

 private:
  Convention convention_ = Convention::berger_fresse;
};

// Sign relating the two conventions on a basis element: the parity of the
// permutation taking caesuras from position order to grouping by value.
int convention_sign(const Surjection& u);

SurjectionElement with_convention(const SurjectionElement& x, Convention c);

SurjectionElement boundary(const SurjectionElement& x);

// Partial composition x o_i y.
SurjectionElement compose(const SurjectionElement& x, const SurjectionElement& y, int i);

// Left action of the symmetric group ring: relabels values.
SurjectionElement operator*(const SymmetricRingElement& pi, const SurjectionElement& x);

// Maximum over basis keys and value pairs {a, b} of the number of value
// changes in the {a, b}-restricted subsequence, minus one.
int complexity(const SurjectionElement& x);

}  // namespace einf
