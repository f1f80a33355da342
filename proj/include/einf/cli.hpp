#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "einf/barratt_eccles.hpp"
#include "einf/chains.hpp"
#include "einf/surjection.hpp"
#include "einf/symmetric_group.hpp"

namespace einf::cli {

enum class ElementKind { surjection, perm_ring, barratt_eccles, simplicial, cubical };

std::string_view to_string(ElementKind k);
std::optional<ElementKind> parse_kind(std::string_view name);

using AnyElement = std::variant<SurjectionElement, SymmetricRingElement, BarrattEcclesElement,
                                SimplicialElement, CubicalElement>;

// Alternatives are listed in ElementKind order.
ElementKind kind_of(const AnyElement& e);

// Literal syntax, whitespace insignificant:
//   element := "0" | ["+" | "-"] term (("+" | "-") term)*
//   term    := [unsigned integer] tuple
//   tuple   := "(" [item ("," item)* [","]] ")",  item := integer | tuple
// Throws ParseError (with column) on malformed text and ShapeError when the
// tuples do not fit the requested kind.
AnyElement parse_element(std::string_view text, ElementKind kind, Torsion torsion = Torsion{},
                         Convention convention = Convention::berger_fresse);

// Inverse of parse_element for the text format.
std::string render_text(const AnyElement& e);

// {"kind", "torsion", "convention", "terms": [{"basis", "coeff"}]}
std::string to_json(const AnyElement& e, Convention convention = Convention::berger_fresse);
std::string to_json(const BarrattEcclesTensor& t);
AnyElement from_json(std::string_view text);

// Entry point of the command-line tool; args exclude the program name.
// Exit codes: 0 success, 2 malformed input or usage, 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace einf::cli
