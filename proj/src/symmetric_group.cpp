#include "einf/symmetric_group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace einf {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int r = arity();
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)])
      throw InvalidValue("not a permutation of {1.." + std::to_string(r) + "}");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int arity) {
  if (arity < 0) throw InvalidValue("negative arity");
  std::vector<int> v(static_cast<std::size_t>(arity));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k)
    inv[static_cast<std::size_t>(values_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (values_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.arity() != tau.arity())
    throw ArityMismatch("cannot multiply permutations of arity " +
                        std::to_string(sigma.arity()) + " and " + std::to_string(tau.arity()));
  std::vector<int> out(tau.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = sigma(tau.values()[k]);
  return Permutation(std::move(out));
}

int sign(const Permutation& sigma) {
  const auto& v = sigma.values();
  int inversions = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

Permutation compose(const Permutation& x, const Permutation& y, int i) {
  if (i < 1 || i > x.arity())
    throw IndexOutOfRange("composition index " + std::to_string(i) + " outside 1.." +
                          std::to_string(x.arity()));
  const int s = y.arity();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(x.arity() + s - 1));
  for (int v : x.values()) {
    if (v == i) {
      for (int w : y.values()) out.push_back(w + i - 1);
    } else {
      out.push_back(v > i ? v + s - 1 : v);
    }
  }
  return Permutation(std::move(out));
}

Permutation cyclic_generator(int arity) {
  if (arity < 1) throw InvalidValue("cyclic generator needs arity >= 1");
  std::vector<int> v(static_cast<std::size_t>(arity));
  for (int k = 0; k < arity; ++k) v[static_cast<std::size_t>(k)] = (k + 1) % arity + 1;
  return Permutation(std::move(v));
}

SymmetricRingElement::SymmetricRingElement(
    std::initializer_list<std::pair<Permutation, Coefficient>> pairs, Torsion t)
    : Combination(t) {
  for (const auto& [key, c] : pairs) add_term(key, c);
}

SymmetricRingElement::SymmetricRingElement(const FreeModuleElement<Permutation>& m)
    : Combination(m.torsion()) {
  for (const auto& [key, c] : m) add_term(key, c);
}

std::optional<int> SymmetricRingElement::arity() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.arity();
}

bool SymmetricRingElement::check_key(const Permutation& key) const {
  if (auto r = arity(); r && *r != key.arity())
    throw ArityMismatch("group ring element mixes arities " + std::to_string(*r) + " and " +
                        std::to_string(key.arity()));
  return true;
}

SymmetricRingElement operator*(const SymmetricRingElement& x, const SymmetricRingElement& y) {
  x.module().require_same_ring(y.module());
  SymmetricRingElement out(x.torsion());
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add_term(a * b, detail::checked_mul(c, d));
  return out;
}

SymmetricRingElement compose(const SymmetricRingElement& x, const SymmetricRingElement& y,
                             int i) {
  x.module().require_same_ring(y.module());
  if (auto r = x.arity(); r && (i < 1 || i > *r))
    throw IndexOutOfRange("composition index " + std::to_string(i) + " outside 1.." +
                          std::to_string(*r));
  SymmetricRingElement out(x.torsion());
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add_term(compose(a, b, i), detail::checked_mul(c, d));
  return out;
}

SymmetricRingElement transfer_element(int arity, Torsion t) {
  SymmetricRingElement out(t);
  out.add_term(cyclic_generator(arity), 1);
  out.add_term(Permutation::identity(arity), -1);
  return out;
}

SymmetricRingElement norm_element(int arity, Torsion t) {
  SymmetricRingElement out(t);
  const Permutation rho = cyclic_generator(arity);
  Permutation power = Permutation::identity(arity);
  for (int j = 0; j < arity; ++j) {
    out.add_term(power, 1);
    power = rho * power;
  }
  return out;
}

}  // namespace einf
