#include "einf/chains.hpp"

#include <algorithm>
#include <string>

#include "einf/format.hpp"

namespace einf {

SimplexTensor::SimplexTensor(std::vector<std::vector<int>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidValue("a simplicial tensor needs at least one factor");
  for (const auto& f : factors_) {
    if (f.empty()) throw InvalidValue("a simplex needs at least one vertex");
    for (int v : f)
      if (v < 0) throw InvalidValue("vertices must be non-negative");
  }
}

int SimplexTensor::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += static_cast<int>(f.size()) - 1;
  return d;
}

bool SimplexTensor::is_degenerate() const noexcept {
  for (const auto& f : factors_)
    for (std::size_t k = 1; k < f.size(); ++k)
      if (f[k] == f[k - 1]) return true;
  return false;
}

CubeTensor::CubeTensor(std::vector<std::vector<int>> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidValue("a cubical tensor needs at least one factor");
  for (const auto& f : factors_) {
    if (f.size() != factors_.front().size())
      throw InvalidValue("cubical factors must have equal word length");
    for (int d : f)
      if (d < 0 || d > 2) throw InvalidValue("cubical digits must lie in {0,1,2}");
  }
}

int CubeTensor::degree() const noexcept {
  int d = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) d += factor_degree(k);
  return d;
}

int CubeTensor::factor_degree(std::size_t k) const noexcept {
  return static_cast<int>(std::count(factors_[k].begin(), factors_[k].end(), 2));
}

SimplicialElement::SimplicialElement(
    std::initializer_list<std::pair<SimplexTensor, Coefficient>> pairs, Torsion t)
    : Combination(t) {
  for (const auto& [key, c] : pairs) add_term(key, c);
}

std::optional<int> SimplicialElement::arity() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.arity();
}

bool SimplicialElement::check_key(const SimplexTensor& key) const {
  if (key.is_degenerate()) return false;
  if (auto r = arity(); r && *r != key.arity())
    throw ArityMismatch("simplicial element must be homogeneous in arity");
  return true;
}

CubicalElement::CubicalElement(std::initializer_list<std::pair<CubeTensor, Coefficient>> pairs,
                               Torsion t)
    : Combination(t) {
  for (const auto& [key, c] : pairs) add_term(key, c);
}

std::optional<int> CubicalElement::arity() const {
  if (is_zero()) return std::nullopt;
  return begin()->first.arity();
}

bool CubicalElement::check_key(const CubeTensor& key) const {
  if (auto r = arity(); r && *r != key.arity())
    throw ArityMismatch("cubical element must be homogeneous in arity");
  return true;
}

SimplicialElement standard_simplex(int n, Torsion t) {
  if (n < 0) throw InvalidValue("dimension must be non-negative");
  std::vector<int> vertices(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) vertices[static_cast<std::size_t>(k)] = k;
  SimplicialElement out(t);
  out.add_term(SimplexTensor({std::move(vertices)}), 1);
  return out;
}

CubicalElement standard_cube(int n, Torsion t) {
  if (n < 0) throw InvalidValue("dimension must be non-negative");
  CubicalElement out(t);
  out.add_term(CubeTensor({std::vector<int>(static_cast<std::size_t>(n), 2)}), 1);
  return out;
}

SimplicialElement boundary(const SimplicialElement& e) {
  SimplicialElement out(e.torsion());
  for (const auto& [key, c] : e) {
    int preceding = 0;
    const auto& fs = key.factors();
    for (std::size_t a = 0; a < fs.size(); ++a) {
      if (fs[a].size() > 1) {
        for (std::size_t j = 0; j < fs[a].size(); ++j) {
          auto faces = fs;
          faces[a].erase(faces[a].begin() + static_cast<std::ptrdiff_t>(j));
          const int s = (preceding + static_cast<int>(j)) % 2 ? -1 : 1;
          out.add_term(SimplexTensor(std::move(faces)), detail::checked_mul(c, s));
        }
      }
      preceding += key.factor_degree(a);
    }
  }
  return out;
}

CubicalElement boundary(const CubicalElement& e) {
  CubicalElement out(e.torsion());
  for (const auto& [key, c] : e) {
    int preceding = 0;
    const auto& fs = key.factors();
    for (std::size_t a = 0; a < fs.size(); ++a) {
      int seen = 0;
      for (std::size_t j = 0; j < fs[a].size(); ++j) {
        if (fs[a][j] != 2) continue;
        const int s = (preceding + seen) % 2 ? -1 : 1;
        auto top = fs, bottom = fs;
        top[a][j] = 1;
        bottom[a][j] = 0;
        out.add_term(CubeTensor(std::move(top)), detail::checked_mul(c, s));
        out.add_term(CubeTensor(std::move(bottom)), detail::checked_mul(c, -s));
        ++seen;
      }
      preceding += seen;
    }
  }
  return out;
}

namespace {

// The action of a basis surjection u factors as: iterated coproduct into
// pieces 1..L (one per position of u), regrouping the pieces by value, and
// multiplying the pieces of each value.  Each product contributes a degree-one
// operator, one per caesura.  The sign is the Koszul sign of moving those
// operators, listed in position order in front of the pieces, to just after
// their piece once pieces are grouped by value.
struct CutSign {
  explicit CutSign(const Surjection& u) : caesuras(u.caesuras()) {
    const auto& vals = u.values();
    const int nc = static_cast<int>(caesuras.size());
    degrees.assign(static_cast<std::size_t>(nc) + vals.size(), 1);
    std::vector<int> marker(vals.size(), -1);
    for (int k = 0; k < nc; ++k) marker[static_cast<std::size_t>(caesuras[static_cast<std::size_t>(k)])] = k;
    for (int value = 1; value <= u.arity(); ++value) {
      for (std::size_t j = 0; j < vals.size(); ++j) {
        if (vals[j] != value) continue;
        target.push_back(nc + static_cast<int>(j));
        if (marker[j] >= 0) target.push_back(marker[j]);
      }
    }
  }

  void set_piece_degree(std::size_t piece, int d) { degrees[caesuras.size() + piece] = d; }
  int sign() const { return koszul_sign(degrees, target); }

  std::vector<int> caesuras;
  std::vector<int> degrees;
  std::vector<int> target;
};

void act_on_simplex(const Surjection& u, Coefficient coeff, int n, SimplicialElement& out) {
  const auto& vals = u.values();
  const std::size_t len = vals.size();
  CutSign cut(u);
  std::vector<int> t(len + 1, 0);
  t[len] = n;
  std::vector<int> last(static_cast<std::size_t>(u.arity()) + 1, -1);

  auto emit = [&] {
    std::vector<std::vector<int>> factors(static_cast<std::size_t>(u.arity()));
    for (std::size_t j = 0; j < len; ++j) {
      auto& f = factors[static_cast<std::size_t>(vals[j] - 1)];
      for (int v = t[j]; v <= t[j + 1]; ++v) f.push_back(v);
    }
    out.add_term(SimplexTensor(std::move(factors)), detail::checked_mul(coeff, cut.sign()));
  };

  // Piece j is the interval [t[j], t[j+1]]; pieces of one value must not share
  // a vertex.
  auto place = [&](auto&& self, std::size_t j) -> void {
    if (j == len) {
      emit();
      return;
    }
    const auto value = static_cast<std::size_t>(vals[j]);
    if (t[j] <= last[value]) return;
    const int lo = j + 1 == len ? n : t[j];
    for (int end = lo; end <= n; ++end) {
      t[j + 1] = end;
      const int saved = last[value];
      last[value] = end;
      cut.set_piece_degree(j, end - t[j]);
      self(self, j + 1);
      last[value] = saved;
    }
  };
  place(place, 0);
}

using Word = std::vector<int>;

// Product on the chains of the cube: merges the vertices 0 (left) and 1
// (right) in one coordinate into the interval; coordinates before it are
// read from the left operand (the right one must be a vertex there), those
// after it from the right operand.
void cube_product(const Word& a, const Word& b, std::vector<Word>& out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0 || b[i] != 1) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = b[j] != 2;
    for (std::size_t j = i + 1; j < n && ok; ++j) ok = a[j] != 2;
    if (!ok) continue;
    Word w(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
    w.push_back(2);
    w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(i) + 1, b.end());
    out.push_back(std::move(w));
  }
}

void act_on_cube(const Surjection& u, Coefficient coeff, int n, CubicalElement& out) {
  const auto& vals = u.values();
  const std::size_t len = vals.size();
  const int r = u.arity();
  CutSign cut(u);
  // position[c]: the piece carrying the interval in coordinate c; earlier
  // pieces sit at vertex 0 of that coordinate, later ones at vertex 1.
  std::vector<int> position(static_cast<std::size_t>(n), 0);

  auto emit = [&] {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (position[static_cast<std::size_t>(a)] > position[static_cast<std::size_t>(b)]) ++inversions;

    std::vector<Word> pieces(len, Word(static_cast<std::size_t>(n)));
    for (std::size_t j = 0; j < len; ++j) {
      int d = 0;
      for (int c = 0; c < n; ++c) {
        const int p = position[static_cast<std::size_t>(c)];
        const int digit = static_cast<int>(j) < p ? 0 : (static_cast<int>(j) == p ? 2 : 1);
        pieces[j][static_cast<std::size_t>(c)] = digit;
        if (digit == 2) ++d;
      }
      cut.set_piece_degree(j, d);
    }

    std::vector<std::vector<Word>> factor_options(static_cast<std::size_t>(r));
    for (int value = 1; value <= r; ++value) {
      std::vector<Word> current;
      bool started = false;
      for (std::size_t j = 0; j < len; ++j) {
        if (vals[j] != value) continue;
        if (!started) {
          current.push_back(pieces[j]);
          started = true;
          continue;
        }
        std::vector<Word> next;
        for (const auto& w : current) cube_product(w, pieces[j], next);
        current = std::move(next);
        if (current.empty()) return;
      }
      factor_options[static_cast<std::size_t>(value - 1)] = std::move(current);
    }

    const Coefficient c =
        detail::checked_mul(coeff, cut.sign() * (inversions % 2 ? -1 : 1));
    std::vector<Word> chosen(static_cast<std::size_t>(r));
    auto choose = [&](auto&& self, std::size_t k) -> void {
      if (k == static_cast<std::size_t>(r)) {
        out.add_term(CubeTensor(chosen), c);
        return;
      }
      for (const auto& w : factor_options[k]) {
        chosen[k] = w;
        self(self, k + 1);
      }
    };
    choose(choose, 0);
  };

  auto place = [&](auto&& self, int c) -> void {
    if (c == n) {
      emit();
      return;
    }
    for (std::size_t p = 0; p < len; ++p) {
      position[static_cast<std::size_t>(c)] = static_cast<int>(p);
      self(self, c + 1);
    }
  };
  place(place, 0);
}

void require_arity_one(std::optional<int> arity) {
  if (arity && *arity != 1)
    throw ArityMismatch("surjections act on arity-one chains, got arity " +
                        std::to_string(*arity));
}

}  // namespace

SimplicialElement act_simplicial(const SurjectionElement& x, int n) {
  if (n < 0) throw InvalidValue("dimension must be non-negative");
  const SurjectionElement bf = with_convention(x, Convention::berger_fresse);
  SimplicialElement out(x.torsion());
  for (const auto& [u, c] : bf) act_on_simplex(u, c, n, out);
  return out;
}

CubicalElement act_cubical(const SurjectionElement& x, int n) {
  if (n < 0) throw InvalidValue("dimension must be non-negative");
  const SurjectionElement bf = with_convention(x, Convention::berger_fresse);
  CubicalElement out(x.torsion());
  for (const auto& [u, c] : bf) act_on_cube(u, c, n, out);
  return out;
}

SimplicialElement act(const SurjectionElement& x, const SimplicialElement& chain) {
  x.module().require_same_ring(chain.module());
  require_arity_one(chain.arity());
  SimplicialElement out(x.torsion());
  for (const auto& [key, c] : chain) {
    const auto& vertices = key.factors().front();
    if (!std::is_sorted(vertices.begin(), vertices.end()))
      throw InvalidValue("simplex vertices must be increasing");
    const int n = static_cast<int>(vertices.size()) - 1;
    for (const auto& [image, v] : act_simplicial(x, n)) {
      auto factors = image.factors();
      for (auto& f : factors)
        for (auto& vertex : f) vertex = vertices[static_cast<std::size_t>(vertex)];
      out.add_term(SimplexTensor(std::move(factors)), detail::checked_mul(c, v));
    }
  }
  return out;
}

CubicalElement act(const SurjectionElement& x, const CubicalElement& chain) {
  x.module().require_same_ring(chain.module());
  require_arity_one(chain.arity());
  CubicalElement out(x.torsion());
  for (const auto& [key, c] : chain) {
    const auto& word = key.factors().front();
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < word.size(); ++j)
      if (word[j] == 2) free.push_back(j);
    for (const auto& [image, v] : act_cubical(x, static_cast<int>(free.size()))) {
      std::vector<Word> factors;
      for (const auto& w : image.factors()) {
        Word full = word;
        for (std::size_t k = 0; k < free.size(); ++k) full[free[k]] = w[k];
        factors.push_back(std::move(full));
      }
      out.add_term(CubeTensor(std::move(factors)), detail::checked_mul(c, v));
    }
  }
  return out;
}

namespace {

template <typename Element, typename Tensor>
Element act_on_factor_impl(const SurjectionElement& x, const Element& e, int i) {
  x.module().require_same_ring(e.module());
  Element out(e.torsion());
  if (x.is_zero()) return out;
  const int dx = *x.degree();
  for (const auto& [key, c] : e) {
    if (i < 1 || i > key.arity())
      throw IndexOutOfRange("factor index " + std::to_string(i) + " outside 1.." +
                            std::to_string(key.arity()));
    int preceding = 0;
    for (int k = 0; k + 1 < i; ++k) preceding += key.factor_degree(static_cast<std::size_t>(k));
    const int s = (dx * preceding) % 2 ? -1 : 1;
    Element single(e.torsion());
    single.add_term(Tensor({key.factors()[static_cast<std::size_t>(i - 1)]}), 1);
    for (const auto& [image, v] : act(x, single)) {
      std::vector<std::vector<int>> factors(key.factors().begin(),
                                            key.factors().begin() + (i - 1));
      factors.insert(factors.end(), image.factors().begin(), image.factors().end());
      factors.insert(factors.end(), key.factors().begin() + i, key.factors().end());
      out.add_term(Tensor(std::move(factors)), detail::checked_mul(c, v * s));
    }
  }
  return out;
}

template <typename Element, typename Tensor>
Element permute_impl(const Permutation& sigma, const Element& e) {
  Element out(e.torsion());
  const Permutation inverse = sigma.inverse();
  for (const auto& [key, c] : e) {
    if (key.arity() != sigma.arity())
      throw ArityMismatch("permutation arity does not match tensor arity");
    std::vector<int> degrees(static_cast<std::size_t>(key.arity()));
    std::vector<int> order(static_cast<std::size_t>(key.arity()));
    std::vector<std::vector<int>> factors;
    for (int slot = 1; slot <= key.arity(); ++slot) {
      const int from = inverse(slot) - 1;
      order[static_cast<std::size_t>(slot - 1)] = from;
      degrees[static_cast<std::size_t>(slot - 1)] = key.factor_degree(static_cast<std::size_t>(slot - 1));
      factors.push_back(key.factors()[static_cast<std::size_t>(from)]);
    }
    out.add_term(Tensor(std::move(factors)), detail::checked_mul(c, koszul_sign(degrees, order)));
  }
  return out;
}

}  // namespace

SimplicialElement act_on_factor(const SurjectionElement& x, const SimplicialElement& e, int i) {
  return act_on_factor_impl<SimplicialElement, SimplexTensor>(x, e, i);
}

CubicalElement act_on_factor(const SurjectionElement& x, const CubicalElement& e, int i) {
  return act_on_factor_impl<CubicalElement, CubeTensor>(x, e, i);
}

SimplicialElement permute_factors(const Permutation& sigma, const SimplicialElement& e) {
  return permute_impl<SimplicialElement, SimplexTensor>(sigma, e);
}

CubicalElement permute_factors(const Permutation& sigma, const CubicalElement& e) {
  return permute_impl<CubicalElement, CubeTensor>(sigma, e);
}

namespace {

std::string latex_simplex(const SimplexTensor& t) {
  std::string out;
  for (std::size_t k = 0; k < t.factors().size(); ++k) {
    if (k) out += " \\otimes ";
    out += '[';
    const auto& f = t.factors()[k];
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(f[j]);
    }
    out += ']';
  }
  return out;
}

std::string latex_cube(const CubeTensor& t) {
  static const char* const cells[] = {"[0]", "[1]", "[01]"};
  std::string out;
  for (std::size_t k = 0; k < t.factors().size(); ++k) {
    if (k) out += " \\otimes ";
    const auto& f = t.factors()[k];
    if (f.empty()) out += "[]";
    for (int d : f) out += cells[d];
  }
  return out;
}

}  // namespace

std::string render(const SimplicialElement& e, ChainFormat format) {
  if (format == ChainFormat::text) return to_text(e);
  return render_terms(e, latex_simplex);
}

std::string render(const CubicalElement& e, ChainFormat format) {
  if (format == ChainFormat::text) return to_text(e);
  return render_terms(e, latex_cube);
}

}  // namespace einf
