#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

#include "einf/errors.hpp"

namespace einf {

using Coefficient = std::int64_t;

// Coefficient ring selector: 0 is the integers, n >= 1 is Z/n.
class Torsion {
 public:
  constexpr Torsion() = default;
  explicit Torsion(Coefficient value) : value_(value) {
    if (value < 0) throw InvalidValue("torsion must be non-negative");
  }

  constexpr Coefficient value() const noexcept { return value_; }
  constexpr bool is_integral() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(Torsion, Torsion) = default;

 private:
  Coefficient value_ = 0;
};

namespace detail {

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

// Canonical representative: residues in [0, n) for n >= 1, identity over Z.
inline Coefficient reduce(Coefficient c, Torsion t) {
  const Coefficient n = t.value();
  if (n == 0) return c;
  Coefficient r = c % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

// Sparse finite linear combination of basis keys over Z or Z/n.
//
// Stored coefficients are always canonical and nonzero, so structural
// equality of the term maps is equality of elements.  Keys are kept in a
// std::map: iteration and rendering are lexicographic on keys.
template <typename Key>
class FreeModuleElement {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Coefficient>;
  using const_iterator = typename map_type::const_iterator;

  FreeModuleElement() = default;
  explicit FreeModuleElement(Torsion torsion) : torsion_(torsion) {}

  FreeModuleElement(std::initializer_list<std::pair<Key, Coefficient>> pairs,
                    Torsion torsion = Torsion{})
      : torsion_(torsion) {
    for (const auto& [key, c] : pairs) add_term(key, c);
  }

  template <typename Range>
  static FreeModuleElement from_pairs(const Range& pairs, Torsion torsion = Torsion{}) {
    FreeModuleElement out(torsion);
    for (const auto& [key, c] : pairs) out.add_term(key, c);
    return out;
  }

  Torsion torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  // Accumulates c * key in place.
  void add_term(const Key& key, Coefficient c) {
    c = detail::reduce(c, torsion_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second = detail::reduce(detail::checked_add(it->second, c), torsion_);
    if (it->second == 0) terms_.erase(it);
  }

  void add_term(Key&& key, Coefficient c) {
    c = detail::reduce(c, torsion_);
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
      return;
    }
    it->second = detail::reduce(detail::checked_add(it->second, c), torsion_);
    if (it->second == 0) terms_.erase(it);
  }

  FreeModuleElement& operator+=(const FreeModuleElement& other) {
    require_same_ring(other);
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
  }

  FreeModuleElement& operator-=(const FreeModuleElement& other) {
    require_same_ring(other);
    for (const auto& [key, c] : other.terms_) add_term(key, detail::checked_mul(c, -1));
    return *this;
  }

  friend FreeModuleElement operator+(FreeModuleElement a, const FreeModuleElement& b) {
    a += b;
    return a;
  }

  friend FreeModuleElement operator-(FreeModuleElement a, const FreeModuleElement& b) {
    a -= b;
    return a;
  }

  FreeModuleElement operator-() const { return scaled(-1); }

  FreeModuleElement scaled(Coefficient c) const {
    FreeModuleElement out(torsion_);
    c = detail::reduce(c, torsion_);
    for (const auto& [key, v] : terms_) {
      Coefficient w = detail::reduce(detail::checked_mul(v, c), torsion_);
      if (w != 0) out.terms_.emplace_hint(out.terms_.end(), key, w);
    }
    return out;
  }

  FreeModuleElement with_torsion(Torsion t) const {
    FreeModuleElement out(t);
    for (const auto& [key, v] : terms_) {
      Coefficient w = detail::reduce(v, t);
      if (w != 0) out.terms_.emplace_hint(out.terms_.end(), key, w);
    }
    return out;
  }

  // Zero element over the same ring.
  FreeModuleElement zero() const { return FreeModuleElement(torsion_); }

  template <typename Other>
  void require_same_ring(const FreeModuleElement<Other>& other) const {
    if (!(torsion_ == other.torsion()))
      throw TorsionMismatch(torsion_.value(), other.torsion().value());
  }

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.torsion_ == b.torsion_ && a.terms_ == b.terms_;
  }

 private:
  Torsion torsion_;
  map_type terms_;
};

template <typename Key>
FreeModuleElement<Key> make_element(
    std::initializer_list<std::pair<Key, Coefficient>> pairs, Torsion t = Torsion{}) {
  return FreeModuleElement<Key>(pairs, t);
}

template <typename Key>
FreeModuleElement<Key> scale(const FreeModuleElement<Key>& a, Coefficient c) {
  return a.scaled(c);
}

template <typename Key>
FreeModuleElement<Key> set_torsion(const FreeModuleElement<Key>& a, Torsion t) {
  return a.with_torsion(t);
}

// Koszul sign of reordering graded items.  `degrees[k]` is the degree of the
// item initially at slot k; `order[j]` is the initial slot of the item that
// ends up at slot j.
template <typename Degrees, typename Order>
int koszul_sign(const Degrees& degrees, const Order& order) {
  long long parity = 0;
  const std::size_t n = std::size(order);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (order[a] > order[b]) parity += (degrees[order[a]] & 1) * (degrees[order[b]] & 1);
  return parity % 2 ? -1 : 1;
}

}  // namespace einf
