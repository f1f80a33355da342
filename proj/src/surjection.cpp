#include "einf/surjection.hpp"

#include <algorithm>
#include <string>

namespace einf {

std::string_view to_string(Convention c) {
  return c == Convention::berger_fresse ? "berger-fresse" : "mcclure-smith";
}

std::optional<Convention> parse_convention(std::string_view name) {
  if (name == "berger-fresse" || name == "Berger-Fresse") return Convention::berger_fresse;
  if (name == "mcclure-smith" || name == "McClure-Smith") return Convention::mcclure_smith;
  return std::nullopt;
}

Surjection::Surjection(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidValue("a surjection needs at least one value");
  for (int v : values_)
    if (v < 1) throw InvalidValue("surjection values must be positive");
  arity_ = *std::max_element(values_.begin(), values_.end());
}

bool Surjection::is_degenerate() const noexcept {
  std::vector<bool> hit(static_cast<std::size_t>(arity_) + 1, false);
  for (std::size_t k = 0; k < values_.size(); ++k) {
    hit[static_cast<std::size_t>(values_[k])] = true;
    if (k > 0 && values_[k] == values_[k - 1]) return true;
  }
  return !std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

std::vector<int> Surjection::caesuras() const {
  std::vector<int> out;
  std::vector<bool> seen_later(static_cast<std::size_t>(arity_) + 1, false);
  for (int k = length() - 1; k >= 0; --k) {
    auto v = static_cast<std::size_t>(values_[static_cast<std::size_t>(k)]);
    if (seen_later[v]) out.push_back(k);
    seen_later[v] = true;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SurjectionElement::SurjectionElement(
    std::initializer_list<std::pair<Surjection, Coefficient>> pairs, Convention c, Torsion t)
    : Combination(t), convention_(c) {
  for (const auto& [key, v] : pairs) add_term(key, v);
}

std::optional<int> SurjectionElement::arity() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.arity();
}

std::optional<int> SurjectionElement::degree() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.degree();
}

bool SurjectionElement::check_key(const Surjection& key) const {
  if (key.is_degenerate()) return false;
  if (!is_zero()) {
    const Surjection& first = begin()->first;
    if (first.arity() != key.arity() || first.degree() != key.degree())
      throw InvalidValue("surjection element must be homogeneous in arity and degree");
  }
  return true;
}

void SurjectionElement::require_compatible(const SurjectionElement& other) const {
  if (convention_ != other.convention_)
    throw ConventionMismatch("surjection elements use different sign conventions");
}

int convention_sign(const Surjection& u) {
  const std::vector<int> cs = u.caesuras();
  std::vector<int> order(cs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return u.values()[static_cast<std::size_t>(cs[static_cast<std::size_t>(a)])] <
           u.values()[static_cast<std::size_t>(cs[static_cast<std::size_t>(b)])];
  });
  const std::vector<int> unit(cs.size(), 1);
  return koszul_sign(unit, order);
}

SurjectionElement with_convention(const SurjectionElement& x, Convention c) {
  if (x.convention() == c) return x;
  SurjectionElement out(c, x.torsion());
  for (const auto& [u, v] : x) out.add_term(u, v * convention_sign(u));
  return out;
}

namespace {

SurjectionElement boundary_bf(const SurjectionElement& x) {
  SurjectionElement out(Convention::berger_fresse, x.torsion());
  for (const auto& [u, coeff] : x) {
    const auto& vals = u.values();
    const std::vector<int> cs = u.caesuras();
    // Caesuras alternate in sign by their rank; deleting the final occurrence
    // of a value takes the opposite sign of its previous occurrence.
    std::vector<int> sign_at(vals.size(), 0);
    for (std::size_t k = 0; k < cs.size(); ++k)
      sign_at[static_cast<std::size_t>(cs[k])] = k % 2 ? -1 : 1;
    std::vector<int> last_seen(static_cast<std::size_t>(u.arity()) + 1, -1);
    for (std::size_t pos = 0; pos < vals.size(); ++pos) {
      const auto v = static_cast<std::size_t>(vals[pos]);
      int s = sign_at[pos];
      if (s == 0 && last_seen[v] >= 0) s = -sign_at[static_cast<std::size_t>(last_seen[v])];
      last_seen[v] = static_cast<int>(pos);
      if (s == 0) continue;  // the only occurrence; removal is not surjective
      std::vector<int> face;
      face.reserve(vals.size() - 1);
      for (std::size_t k = 0; k < vals.size(); ++k)
        if (k != pos) face.push_back(vals[k]);
      Surjection f(std::move(face));
      if (f.arity() == u.arity()) out.add_term(f, detail::checked_mul(s, coeff));
    }
  }
  return out;
}

// Berger-Fresse composite of basis elements.  Every caesura of the composite
// is inherited either from x (including the junctions between consecutive
// blocks of the splitting of y) or from y (at the last copy of a y position);
// the sign is that of the permutation taking (caesuras of x, caesuras of y)
// to their order of appearance in the composite.
void compose_basis_bf(const Surjection& u, const Surjection& w, int i, Coefficient coeff,
                      SurjectionElement& out) {
  const auto& uv = u.values();
  const auto& wv = w.values();
  const int s = w.arity();
  const int len_w = w.length();

  std::vector<int> x_label(uv.size(), -1);
  const std::vector<int> xc = u.caesuras();
  for (std::size_t k = 0; k < xc.size(); ++k) x_label[static_cast<std::size_t>(xc[k])] = static_cast<int>(k);
  std::vector<int> y_label(wv.size(), -1);
  const std::vector<int> yc = w.caesuras();
  for (std::size_t k = 0; k < yc.size(); ++k)
    y_label[static_cast<std::size_t>(yc[k])] = static_cast<int>(xc.size() + k);

  std::vector<std::size_t> occurrences;
  for (std::size_t p = 0; p < uv.size(); ++p)
    if (uv[p] == i) occurrences.push_back(p);
  const std::size_t blocks = occurrences.size();

  // bounds[0] = 0 <= bounds[1] <= ... <= bounds[blocks] = len_w - 1
  std::vector<int> bounds(blocks + 1, 0);
  bounds[blocks] = len_w - 1;

  std::vector<int> seq;
  std::vector<int> labels;
  const std::vector<int> unit(xc.size() + yc.size(), 1);

  auto emit = [&] {
    seq.clear();
    labels.clear();
    std::size_t block = 0;
    for (std::size_t p = 0; p < uv.size(); ++p) {
      if (uv[p] != i) {
        seq.push_back(uv[p] > i ? uv[p] + s - 1 : uv[p]);
        if (x_label[p] >= 0) labels.push_back(x_label[p]);
        continue;
      }
      const int lo = bounds[block], hi = bounds[block + 1];
      for (int q = lo; q <= hi; ++q) {
        seq.push_back(wv[static_cast<std::size_t>(q)] + i - 1);
        if (q == hi && block + 1 < blocks) {
          labels.push_back(x_label[p]);
        } else if (y_label[static_cast<std::size_t>(q)] >= 0) {
          labels.push_back(y_label[static_cast<std::size_t>(q)]);
        }
      }
      ++block;
    }
    out.add_term(Surjection(seq), coeff * koszul_sign(unit, labels));
  };

  // Enumerate the interior bounds as a non-decreasing sequence.
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == blocks) {
      emit();
      return;
    }
    for (int b = bounds[k - 1]; b < len_w; ++b) {
      bounds[k] = b;
      self(self, k + 1);
    }
  };
  if (blocks == 1) {
    emit();
  } else {
    recurse(recurse, 1);
  }
}

SurjectionElement compose_bf(const SurjectionElement& x, const SurjectionElement& y, int i) {
  SurjectionElement out(Convention::berger_fresse, x.torsion());
  for (const auto& [u, a] : x)
    for (const auto& [w, b] : y) compose_basis_bf(u, w, i, detail::checked_mul(a, b), out);
  return out;
}

}  // namespace

SurjectionElement boundary(const SurjectionElement& x) {
  const Convention c = x.convention();
  return with_convention(boundary_bf(with_convention(x, Convention::berger_fresse)), c);
}

SurjectionElement compose(const SurjectionElement& x, const SurjectionElement& y, int i) {
  x.require_compatible(y);
  x.module().require_same_ring(y.module());
  if (auto r = x.arity(); r && (i < 1 || i > *r))
    throw IndexOutOfRange("composition index " + std::to_string(i) + " outside 1.." +
                          std::to_string(*r));
  const Convention c = x.convention();
  return with_convention(compose_bf(with_convention(x, Convention::berger_fresse),
                                    with_convention(y, Convention::berger_fresse), i),
                         c);
}

SurjectionElement operator*(const SymmetricRingElement& pi, const SurjectionElement& x) {
  pi.module().require_same_ring(x.module());
  if (pi.arity() && x.arity() && *pi.arity() != *x.arity())
    throw ArityMismatch("permutation arity " + std::to_string(*pi.arity()) +
                        " does not match surjection arity " + std::to_string(*x.arity()));
  // Relabeling preserves caesura positions, so it is sign free in the
  // Berger-Fresse convention.
  const SurjectionElement bf = with_convention(x, Convention::berger_fresse);
  SurjectionElement out(Convention::berger_fresse, x.torsion());
  for (const auto& [sigma, a] : pi) {
    for (const auto& [u, b] : bf) {
      std::vector<int> relabeled(u.values().size());
      std::transform(u.values().begin(), u.values().end(), relabeled.begin(),
                     [&](int v) { return sigma(v); });
      out.add_term(Surjection(std::move(relabeled)), detail::checked_mul(a, b));
    }
  }
  return with_convention(out, x.convention());
}

int complexity(const SurjectionElement& x) {
  int result = 0;
  for (const auto& [u, coeff] : x) {
    const auto& vals = u.values();
    for (int a = 1; a <= u.arity(); ++a) {
      for (int b = a + 1; b <= u.arity(); ++b) {
        int changes = 0;
        int prev = 0;
        for (int v : vals) {
          if (v != a && v != b) continue;
          if (prev != 0 && v != prev) ++changes;
          prev = v;
        }
        result = std::max(result, changes - 1);
      }
    }
  }
  return result;
}

}  // namespace einf
