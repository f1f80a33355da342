#pragma once

#include <utility>

#include "einf/free_module.hpp"

namespace einf {

// Shared vector-space surface of the typed elements (surjection, Barratt-Eccles,
// chains, ...).  Derived supplies
//   bool check_key(const Key&) const;  // false drops the key (degenerate);
//                                      // throws on invalid / inhomogeneous keys
//   void require_compatible(const Derived&) const; // attributes beyond torsion
template <typename Derived, typename Key>
class Combination {
 public:
  using key_type = Key;
  using module_type = FreeModuleElement<Key>;
  using const_iterator = typename module_type::const_iterator;

  const module_type& module() const noexcept { return module_; }
  Torsion torsion() const noexcept { return module_.torsion(); }
  bool is_zero() const noexcept { return module_.is_zero(); }
  std::size_t size() const noexcept { return module_.size(); }
  const_iterator begin() const noexcept { return module_.begin(); }
  const_iterator end() const noexcept { return module_.end(); }
  Coefficient coefficient(const Key& key) const { return module_.coefficient(key); }

  void add_term(const Key& key, Coefficient c) {
    if (self().check_key(key)) module_.add_term(key, c);
  }

  Derived& operator+=(const Derived& other) {
    self().require_compatible(other);
    module_.require_same_ring(other.module_);
    for (const auto& [key, c] : other.module_) add_term(key, c);
    return self();
  }

  Derived& operator-=(const Derived& other) {
    self().require_compatible(other);
    module_.require_same_ring(other.module_);
    for (const auto& [key, c] : other.module_) add_term(key, detail::checked_mul(c, -1));
    return self();
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }

  Derived operator-() const { return scaled(-1); }
  Derived scaled(Coefficient c) const { return rebuilt(module_.scaled(c)); }
  Derived with_torsion(Torsion t) const { return rebuilt(module_.with_torsion(t)); }

  // Zero element with the same ring and attributes.
  Derived zero() const { return rebuilt(module_.zero()); }

  bool operator==(const Combination&) const = default;

 protected:
  Combination() = default;
  explicit Combination(Torsion t) : module_(t) {}

  Derived rebuilt(module_type m) const {
    Derived out = self();
    out.module_ = std::move(m);
    return out;
  }

  module_type module_;

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }
};

}  // namespace einf
