#include "einf/steenrod.hpp"

#include <map>
#include <mutex>
#include <string>

namespace einf {

namespace {

BarrattEcclesElement prepend_identity(const BarrattEcclesElement& x) {
  BarrattEcclesElement out(x.torsion());
  for (const auto& [simplex, c] : x) {
    std::vector<Permutation> coords;
    coords.reserve(simplex.coordinates().size() + 1);
    coords.push_back(Permutation::identity(simplex.arity()));
    coords.insert(coords.end(), simplex.coordinates().begin(), simplex.coordinates().end());
    out.add_term(BarrattEcclesSimplex(std::move(coords)), c);
  }
  return out;
}

void require_generator(int r, int i) {
  if (r < 1) throw InvalidValue("arity must be at least 1");
  if (i < 0) throw InvalidValue("degree must be non-negative");
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, BarrattEcclesElement> be_cache;
std::map<std::pair<int, int>, SurjectionElement> surj_cache;

}  // namespace

BarrattEcclesElement psi_barratt_eccles(int r, int i) {
  require_generator(r, i);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = be_cache.find({r, i}); it != be_cache.end()) return it->second;
  }
  BarrattEcclesElement current;
  current.add_term(BarrattEcclesSimplex({Permutation::identity(r)}), 1);
  const auto transfer = transfer_element(r);
  const auto norm = norm_element(r);
  for (int k = 1; k <= i; ++k) current = prepend_identity((k % 2 ? transfer : norm) * current);
  std::lock_guard lock(cache_mutex);
  return be_cache.emplace(std::pair{r, i}, current).first->second;
}

SurjectionElement psi_surjection(int r, int i) {
  require_generator(r, i);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = surj_cache.find({r, i}); it != surj_cache.end()) return it->second;
  }
  SurjectionElement result = table_reduction(psi_barratt_eccles(r, i));
  std::lock_guard lock(cache_mutex);
  return surj_cache.emplace(std::pair{r, i}, std::move(result)).first->second;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

int steenrod_index(int p, int s, int q, bool bockstein) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) {
    if (bockstein) throw DomainError("the Bockstein variant needs an odd prime");
    return s - q;
  }
  const int d = (2 * s - q) * (p - 1);
  return bockstein ? d - 1 : d;
}

namespace {

long long power_mod(long long base, long long exponent, long long p) {
  long long result = 1;
  base %= p;
  if (base < 0) base += p;
  while (exponent > 0) {
    if (exponent & 1) result = result * base % p;
    base = base * base % p;
    exponent >>= 1;
  }
  return result;
}

}  // namespace

int nu(int p, int q) {
  if (!is_prime(p) || p == 2) throw DomainError("nu is defined for odd primes only");
  const long long m = (p - 1) / 2;
  long long factorial = 1;
  for (long long k = 2; k <= m; ++k) factorial = factorial * k % p;
  // factorial is a unit mod p; a negative power goes through its inverse
  const long long base = q >= 0 ? factorial : power_mod(factorial, p - 2, p);
  const long long exponent = q >= 0 ? q : -static_cast<long long>(q);
  long long value = power_mod(base, exponent, p);
  const long long qq = q;
  const long long parity = ((qq * (qq - 1)) / 2 % 2 * m) % 2;
  if (parity != 0) value = (p - value) % p;
  return static_cast<int>(value);
}

void SteenrodChainRequest::validate() const {
  if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
  if (q > 0) throw DomainError("cochain degree q must be non-positive");
  if (bockstein && prime == 2) throw DomainError("the Bockstein variant needs an odd prime");
}

namespace {

template <typename Element>
Element keep_equal_dimensions(const Element& e, int dimension, Coefficient c, Torsion t) {
  Element out(t);
  for (const auto& [key, v] : e) {
    bool keep = true;
    for (std::size_t k = 0; k < key.factors().size() && keep; ++k)
      keep = key.factor_degree(k) == dimension;
    if (keep) out.add_term(key, detail::checked_mul(v, c));
  }
  return out;
}

}  // namespace

ChainElement steenrod_chain(const SteenrodChainRequest& request) {
  request.validate();
  const int p = request.prime;
  const Torsion t(p);
  const int d = steenrod_index(p, request.s, request.q, request.bockstein);
  const bool simplicial = request.context == ChainContext::simplicial;
  if (d < 0) {
    if (simplicial) return SimplicialElement(t);
    return CubicalElement(t);
  }
  const int m = -p * request.q - d;
  Coefficient c = 1;
  if (p > 2) c = (request.s % 2 ? -1 : 1) * nu(p, request.q);
  const int dimension = -request.q;
  if (m < 0) {
    if (simplicial) return SimplicialElement(t);
    return CubicalElement(t);
  }
  const SurjectionElement psi = psi_surjection(p, d);
  if (simplicial) return keep_equal_dimensions(act_simplicial(psi, m), dimension, c, t);
  return keep_equal_dimensions(act_cubical(psi, m), dimension, c, t);
}

}  // namespace einf
