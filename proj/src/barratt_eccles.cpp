#include "einf/barratt_eccles.hpp"

#include <algorithm>
#include <string>

namespace einf {

BarrattEcclesSimplex::BarrattEcclesSimplex(std::vector<Permutation> coordinates)
    : coords_(std::move(coordinates)) {
  if (coords_.empty()) throw InvalidValue("a Barratt-Eccles simplex needs a coordinate");
  for (const auto& p : coords_)
    if (p.arity() != coords_.front().arity())
      throw InvalidValue("Barratt-Eccles coordinates must share one arity");
}

bool BarrattEcclesSimplex::is_degenerate() const noexcept {
  for (std::size_t k = 1; k < coords_.size(); ++k)
    if (coords_[k] == coords_[k - 1]) return true;
  return false;
}

BarrattEcclesElement::BarrattEcclesElement(
    std::initializer_list<std::pair<BarrattEcclesSimplex, Coefficient>> pairs, Torsion t)
    : Combination(t) {
  for (const auto& [key, c] : pairs) add_term(key, c);
}

std::optional<int> BarrattEcclesElement::arity() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.arity();
}

std::optional<int> BarrattEcclesElement::degree() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.degree();
}

bool BarrattEcclesElement::check_key(const BarrattEcclesSimplex& key) const {
  if (key.is_degenerate()) return false;
  if (!is_zero()) {
    const auto& first = begin()->first;
    if (first.arity() != key.arity() || first.degree() != key.degree())
      throw InvalidValue("Barratt-Eccles element must be homogeneous in arity and degree");
  }
  return true;
}

namespace {

std::vector<Permutation> drop(const std::vector<Permutation>& v, std::size_t k) {
  std::vector<Permutation> out;
  out.reserve(v.size() - 1);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (j != k) out.push_back(v[j]);
  return out;
}

bool has_repeat(const std::vector<Permutation>& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] == v[k - 1]) return true;
  return false;
}

}  // namespace

BarrattEcclesElement boundary(const BarrattEcclesElement& x) {
  BarrattEcclesElement out(x.torsion());
  for (const auto& [simplex, c] : x) {
    const auto& coords = simplex.coordinates();
    if (coords.size() == 1) continue;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      auto face = drop(coords, k);
      if (has_repeat(face)) continue;
      out.add_term(BarrattEcclesSimplex(std::move(face)), k % 2 ? -c : c);
    }
  }
  return out;
}

std::vector<ShufflePath> shuffle_paths(int n, int m) {
  std::vector<ShufflePath> out;
  ShufflePath path;
  path.first.push_back(0);
  path.second.push_back(0);
  // area counts, for each horizontal step, the vertical steps taken before it
  auto walk = [&](auto&& self, int i, int j, int area) -> void {
    if (i == n && j == m) {
      path.sign = area % 2 ? -1 : 1;
      out.push_back(path);
      return;
    }
    if (i < n) {
      path.first.push_back(i + 1);
      path.second.push_back(j);
      self(self, i + 1, j, area + j);
      path.first.pop_back();
      path.second.pop_back();
    }
    if (j < m) {
      path.first.push_back(i);
      path.second.push_back(j + 1);
      self(self, i, j + 1, area);
      path.first.pop_back();
      path.second.pop_back();
    }
  };
  walk(walk, 0, 0, 0);
  return out;
}

FreeModuleElement<std::pair<std::vector<Permutation>, std::vector<Permutation>>>
eilenberg_zilber(const BarrattEcclesSimplex& a, const BarrattEcclesSimplex& b) {
  FreeModuleElement<std::pair<std::vector<Permutation>, std::vector<Permutation>>> out;
  for (const auto& path : shuffle_paths(a.degree(), b.degree())) {
    std::vector<Permutation> front, back;
    for (std::size_t k = 0; k < path.first.size(); ++k) {
      front.push_back(a[static_cast<std::size_t>(path.first[k])]);
      back.push_back(b[static_cast<std::size_t>(path.second[k])]);
    }
    out.add_term({std::move(front), std::move(back)}, path.sign);
  }
  return out;
}

BarrattEcclesElement compose(const BarrattEcclesElement& x, const BarrattEcclesElement& y,
                             int i) {
  x.module().require_same_ring(y.module());
  if (auto r = x.arity(); r && (i < 1 || i > *r))
    throw IndexOutOfRange("composition index " + std::to_string(i) + " outside 1.." +
                          std::to_string(*r));
  BarrattEcclesElement out(x.torsion());
  for (const auto& [a, c] : x) {
    for (const auto& [b, d] : y) {
      const Coefficient cd = detail::checked_mul(c, d);
      for (const auto& [pair, s] : eilenberg_zilber(a, b)) {
        std::vector<Permutation> coords;
        coords.reserve(pair.first.size());
        for (std::size_t k = 0; k < pair.first.size(); ++k)
          coords.push_back(compose(pair.first[k], pair.second[k], i));
        if (has_repeat(coords)) continue;
        out.add_term(BarrattEcclesSimplex(std::move(coords)), detail::checked_mul(cd, s));
      }
    }
  }
  return out;
}

BarrattEcclesTensor diagonal(const BarrattEcclesElement& x) {
  BarrattEcclesTensor out(x.torsion());
  for (const auto& [simplex, c] : x) {
    const auto& coords = simplex.coordinates();
    for (std::size_t k = 0; k < coords.size(); ++k) {
      BarrattEcclesSimplex front(std::vector<Permutation>(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(k) + 1));
      BarrattEcclesSimplex back(std::vector<Permutation>(coords.begin() + static_cast<std::ptrdiff_t>(k), coords.end()));
      out.add_term({std::move(front), std::move(back)}, c);
    }
  }
  return out;
}

BarrattEcclesTensor boundary(const BarrattEcclesTensor& t) {
  BarrattEcclesTensor out(t.torsion());
  auto faces = [&](const BarrattEcclesSimplex& s) {
    BarrattEcclesElement e(t.torsion());
    e.add_term(s, 1);
    return boundary(e);
  };
  for (const auto& [pair, c] : t) {
    for (const auto& [f, v] : faces(pair.first))
      out.add_term({f, pair.second}, detail::checked_mul(c, v));
    const int sign = pair.first.degree() % 2 ? -1 : 1;
    for (const auto& [f, v] : faces(pair.second))
      out.add_term({pair.first, f}, detail::checked_mul(c, v * sign));
  }
  return out;
}

BarrattEcclesElement operator*(const SymmetricRingElement& pi, const BarrattEcclesElement& x) {
  pi.module().require_same_ring(x.module());
  if (pi.arity() && x.arity() && *pi.arity() != *x.arity())
    throw ArityMismatch("permutation arity " + std::to_string(*pi.arity()) +
                        " does not match Barratt-Eccles arity " + std::to_string(*x.arity()));
  BarrattEcclesElement out(x.torsion());
  for (const auto& [sigma, a] : pi) {
    for (const auto& [simplex, b] : x) {
      std::vector<Permutation> coords;
      coords.reserve(simplex.coordinates().size());
      for (const auto& p : simplex.coordinates()) coords.push_back(sigma * p);
      out.add_term(BarrattEcclesSimplex(std::move(coords)), detail::checked_mul(a, b));
    }
  }
  return out;
}

int complexity(const BarrattEcclesElement& x) {
  int result = 0;
  for (const auto& [simplex, c] : x) {
    const int r = simplex.arity();
    std::vector<std::vector<int>> position;  // position[k][v] = index of v in sigma_k
    for (const auto& p : simplex.coordinates()) {
      std::vector<int> pos(static_cast<std::size_t>(r) + 1);
      for (int k = 0; k < r; ++k) pos[static_cast<std::size_t>(p.values()[static_cast<std::size_t>(k)])] = k;
      position.push_back(std::move(pos));
    }
    for (int a = 1; a <= r; ++a) {
      for (int b = a + 1; b <= r; ++b) {
        int changes = 0;
        for (std::size_t k = 1; k < position.size(); ++k) {
          const bool before = position[k][static_cast<std::size_t>(a)] < position[k][static_cast<std::size_t>(b)];
          const bool was = position[k - 1][static_cast<std::size_t>(a)] < position[k - 1][static_cast<std::size_t>(b)];
          if (before != was) ++changes;
        }
        result = std::max(result, changes);
      }
    }
  }
  return result;
}

namespace {

// Lines sigma_0..sigma_n; line k reads parts[k] values of sigma_k not yet
// used, and every line but the last marks all but its final value as used.
void reduce_simplex(const BarrattEcclesSimplex& simplex, Coefficient c, SurjectionElement& out) {
  const int n = simplex.degree();
  const int r = simplex.arity();
  const int total = n + r;
  std::vector<int> parts(static_cast<std::size_t>(n) + 1, 1);

  auto emit = [&] {
    std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(total));
    for (int k = 0; k <= n; ++k) {
      const auto& line = simplex[static_cast<std::size_t>(k)].values();
      int need = parts[static_cast<std::size_t>(k)];
      int last = 0;
      for (int v : line) {
        if (need == 0) break;
        if (used[static_cast<std::size_t>(v)]) continue;
        seq.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
        last = v;
        --need;
      }
      if (need > 0) return;
      if (k < n) used[static_cast<std::size_t>(last)] = false;
    }
    out.add_term(Surjection(std::move(seq)), c);
  };

  // compositions of total into n+1 positive parts
  auto split = [&](auto&& self, int k, int remaining) -> void {
    if (k == n) {
      parts[static_cast<std::size_t>(k)] = remaining;
      emit();
      return;
    }
    for (int a = 1; a <= remaining - (n - k); ++a) {
      parts[static_cast<std::size_t>(k)] = a;
      self(self, k + 1, remaining - a);
    }
  };
  split(split, 0, total);
}

}  // namespace

SurjectionElement table_reduction(const BarrattEcclesElement& x) {
  SurjectionElement out(Convention::berger_fresse, x.torsion());
  for (const auto& [simplex, c] : x) reduce_simplex(simplex, c, out);
  return out;
}

}  // namespace einf
