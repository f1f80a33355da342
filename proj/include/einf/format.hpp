#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "einf/barratt_eccles.hpp"
#include "einf/chains.hpp"
#include "einf/surjection.hpp"
#include "einf/symmetric_group.hpp"

namespace einf {

// Tuple notation: (1,2,3), a one-element tuple as (1,), nesting as
// ((0,1),(1,2)).

std::string to_string(const std::vector<int>& tuple);
std::string to_string(const Permutation& p);
std::string to_string(const Surjection& u);
std::string to_string(const BarrattEcclesSimplex& s);
std::string to_string(const SimplexTensor& t);
std::string to_string(const CubeTensor& t);
std::string to_string(const BarrattEcclesPair& p);

// "- (2,1,3) - 2(2,3,1) + (1,2,3)": unit coefficients elided, terms in key
// order, the zero element as "0".
template <typename Element, typename Printer>
std::string render_terms(const Element& e, Printer&& print_basis) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : e) {
    Coefficient magnitude = c;
    if (c < 0) {
      magnitude = -c;
      out += first ? "- " : " - ";
    } else if (!first) {
      out += " + ";
    }
    if (magnitude != 1) out += std::to_string(magnitude);
    out += print_basis(key);
    first = false;
  }
  return out;
}

template <typename Element>
std::string to_text(const Element& e) {
  return render_terms(e, [](const auto& key) { return to_string(key); });
}

std::ostream& operator<<(std::ostream& os, const Permutation& p);
std::ostream& operator<<(std::ostream& os, const SymmetricRingElement& e);
std::ostream& operator<<(std::ostream& os, const SurjectionElement& e);
std::ostream& operator<<(std::ostream& os, const BarrattEcclesElement& e);
std::ostream& operator<<(std::ostream& os, const SimplicialElement& e);
std::ostream& operator<<(std::ostream& os, const CubicalElement& e);
std::ostream& operator<<(std::ostream& os, const BarrattEcclesTensor& e);

}  // namespace einf
