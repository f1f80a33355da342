#include <json.hpp>

#include "einf/cli.hpp"

namespace einf::cli {

using nlohmann::json;

namespace {

json basis(const Permutation& p) { return p.values(); }
json basis(const Surjection& u) { return u.values(); }
json basis(const SimplexTensor& t) { return t.factors(); }
json basis(const CubeTensor& t) { return t.factors(); }
json basis(const BarrattEcclesSimplex& s) {
  json out = json::array();
  for (const auto& p : s.coordinates()) out.push_back(p.values());
  return out;
}
json basis(const BarrattEcclesPair& p) { return json::array({basis(p.first), basis(p.second)}); }

template <typename Element>
json terms(const Element& e) {
  json out = json::array();
  for (const auto& [key, c] : e) out.push_back({{"basis", basis(key)}, {"coeff", c}});
  return out;
}

json document(std::string_view kind, Torsion t, Convention c, json body) {
  return {{"kind", kind},
          {"torsion", t.value()},
          {"convention", to_string(c)},
          {"terms", std::move(body)}};
}

std::string literal_of(const json& b) {
  // Rebuild the tuple literal so JSON input reuses the text parser's
  // validation.
  if (b.is_number_integer()) return std::to_string(b.get<long long>());
  if (!b.is_array()) throw ParseError("basis entries must be integers or arrays", 0);
  std::string out = "(";
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (k) out += ',';
    out += literal_of(b[k]);
  }
  if (b.size() == 1) out += ',';
  return out + ")";
}

}  // namespace

std::string to_json(const AnyElement& e, Convention convention) {
  return std::visit(
             [&](const auto& x) {
               using T = std::decay_t<decltype(x)>;
               Convention c = convention;
               if constexpr (std::is_same_v<T, SurjectionElement>) c = x.convention();
               return document(to_string(kind_of(e)), x.torsion(), c, terms(x));
             },
             e)
      .dump();
}

std::string to_json(const BarrattEcclesTensor& t) {
  return document("barratt-eccles-tensor", t.torsion(), Convention::berger_fresse, terms(t))
      .dump();
}

AnyElement from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what(), ex.byte);
  }
  try {
    const auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (!kind) throw ShapeError("unknown kind " + doc.at("kind").dump(), 0);
    const long long torsion = doc.value("torsion", 0LL);
    if (torsion < 0) throw ParseError("torsion must be non-negative", 0);
    auto convention = Convention::berger_fresse;
    if (doc.contains("convention")) {
      auto c = parse_convention(doc.at("convention").get<std::string>());
      if (!c) throw ParseError("unknown convention " + doc.at("convention").dump(), 0);
      convention = *c;
    }
    std::string literal;
    for (const auto& term : doc.at("terms")) {
      const long long coeff = term.at("coeff").get<long long>();
      if (coeff == std::numeric_limits<long long>::min()) throw CoefficientOverflow();
      literal += coeff < 0 ? " - " : " + ";
      literal += std::to_string(coeff < 0 ? -coeff : coeff);
      literal += literal_of(term.at("basis"));
    }
    if (literal.empty()) literal = "0";
    return parse_element(literal, *kind, Torsion(torsion), convention);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed element document: ") + ex.what(), 0);
  }
}

}  // namespace einf::cli
