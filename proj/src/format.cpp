#include "einf/format.hpp"

namespace einf {

namespace {

template <typename Items, typename Fn>
std::string tuple_of(const Items& items, Fn&& item) {
  std::string out = "(";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ',';
    out += item(items[k]);
  }
  if (items.size() == 1) out += ',';
  return out + ")";
}

}  // namespace

std::string to_string(const std::vector<int>& tuple) {
  return tuple_of(tuple, [](int v) { return std::to_string(v); });
}

std::string to_string(const Permutation& p) { return to_string(p.values()); }
std::string to_string(const Surjection& u) { return to_string(u.values()); }

std::string to_string(const BarrattEcclesSimplex& s) {
  return tuple_of(s.coordinates(), [](const Permutation& p) { return to_string(p); });
}

std::string to_string(const SimplexTensor& t) {
  return tuple_of(t.factors(), [](const std::vector<int>& f) { return to_string(f); });
}

std::string to_string(const CubeTensor& t) {
  return tuple_of(t.factors(), [](const std::vector<int>& f) { return to_string(f); });
}

std::string to_string(const BarrattEcclesPair& p) {
  return "(" + to_string(p.first) + "," + to_string(p.second) + ")";
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const SymmetricRingElement& e) {
  return os << to_text(e);
}
std::ostream& operator<<(std::ostream& os, const SurjectionElement& e) {
  return os << to_text(e);
}
std::ostream& operator<<(std::ostream& os, const BarrattEcclesElement& e) {
  return os << to_text(e);
}
std::ostream& operator<<(std::ostream& os, const SimplicialElement& e) {
  return os << to_text(e);
}
std::ostream& operator<<(std::ostream& os, const CubicalElement& e) { return os << to_text(e); }
std::ostream& operator<<(std::ostream& os, const BarrattEcclesTensor& e) {
  return os << to_text(e);
}

}  // namespace einf
