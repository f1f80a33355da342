#pragma once

#include <variant>

#include "einf/barratt_eccles.hpp"
#include "einf/chains.hpp"
#include "einf/surjection.hpp"

namespace einf {

// Images psi_r(e_i) of the preferred generators of the minimal free
// C_r-resolution.  Built by the contraction "prepend the identity":
//   psi(e_0) = (id), psi(e_{2k+1}) = h(T psi(e_{2k})), psi(e_{2k+2}) = h(N psi(e_{2k+1})),
// with T = rho - 1 and N = 1 + rho + ... + rho^{r-1}.  Results are cached.
BarrattEcclesElement psi_barratt_eccles(int r, int i);

// Table reduction of psi_barratt_eccles(r, i), Berger-Fresse convention.
SurjectionElement psi_surjection(int r, int i);

// Degree d with P_s = D_d (p = 2: Sq^s as D_{s-q}).
int steenrod_index(int p, int s, int q, bool bockstein);

// nu(q) = (-1)^{q(q-1)m/2} (m!)^q mod p, m = (p-1)/2; p odd.
int nu(int p, int q);

bool is_prime(int p);

enum class ChainContext { simplicial, cubical };

struct SteenrodChainRequest {
  int prime = 2;
  int s = 0;
  int q = 0;
  bool bockstein = false;
  ChainContext context = ChainContext::simplicial;

  // Throws DomainError on a non-prime p, q > 0 or a Bockstein at p = 2.
  void validate() const;
};

using ChainElement = std::variant<SimplicialElement, CubicalElement>;

// The chain of the standard cell whose pairing with x^{(x)p} computes the
// operation on a degree q cocycle x.  Zero when the index d is negative.
ChainElement steenrod_chain(const SteenrodChainRequest& request);

}  // namespace einf
