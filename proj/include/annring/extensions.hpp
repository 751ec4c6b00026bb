#pragma once

// Ring extensions 0 -> B -> E -> Q -> 0 of the type of an E-system B -> D,
// factor systems, crossed products [B, phi, f, g, Q] and their
// classification through the reduced structure of the E-system.

#include <optional>
#include <string>
#include <vector>

#include "annring/anncat.hpp"
#include "annring/check.hpp"
#include "annring/cohomology.hpp"
#include "annring/crossed.hpp"

namespace annring {

struct Extension {
  ESystem base;
  RingPtr E;
  RingPtr Q;
  std::vector<int> j;    // B -> E
  std::vector<int> p;    // E -> Q
  std::vector<int> eps;  // E -> D
};

// Checks that j is an injective ring map, p a surjective unital one with
// Ker p = Im j, eps a unital ring map, (B, E, j, theta') an E-system and
// (id, eps) a morphism into the base. Throws AxiomError naming the failure.
Extension validate_extension(const ESystem& base, RingPtr E, RingPtr Q, std::vector<int> j, std::vector<int> p,
                             std::vector<int> eps);

// (B, E, j, theta') with theta'_e b = j^{-1}(e j(b)) and b theta'_e = j^{-1}(j(b) e).
ESystem extension_esystem(const Extension& ext);

// psi: Q -> Coker d with psi(p(e)) = q(eps(e)), checked over every e.
RingHom induced_psi(const Extension& ext);

struct FactorSystem {
  RingPtr B;
  RingPtr Q;
  std::vector<Bimultiplication> phi;  // Q -> M_B
  std::vector<int> f;                 // [u * |Q| + v], elements of B
  std::vector<int> g;
};

// Normalization, the cocycle and symmetry conditions on f, the associativity
// and mixed conditions on g, phi additive and multiplicative up to inner
// bimultiplications of f and g, phi(1) = id and pairwise permutability.
CheckReport check_factor_system(const FactorSystem& fs);

// Carrier B x Q with (b, u) at index u * |B| + b.
struct CrossedProduct {
  RingPtr E;
  std::vector<int> j;  // b -> (b, 0)
  std::vector<int> p;  // (b, u) -> u
};

// (b,u) + (b',v) = (b + b' + f(u,v), u + v),
// (b,u)(b',v) = (bb' + b phi(v) + phi(u) b' + g(u,v), uv). No checks.
RingTables crossed_product_tables(const FactorSystem& fs);

// Throws AxiomError on a violated condition. When phi is not permutable the
// error is the failing associativity triple ((0,u), (a,0), (0,v)) of E.
CrossedProduct crossed_product(const FactorSystem& fs);

// The crossed product as an extension with eps(b, u) = d(b) + x[u].
Extension crossed_product_extension(const ESystem& base, const FactorSystem& fs, const std::vector<int>& x);

// Least element of each fibre of p.
std::vector<int> least_lifts(const Extension& ext);

// phi(u) = theta'_{e_u}, f(u,v) = j^{-1}(e_u + e_v - e_{u+v}),
// g(u,v) = j^{-1}(e_u e_v - e_{uv}), for lifts e with p(e_u) = u, e_0 = 0.
FactorSystem factor_system_from_extension(const Extension& ext, const std::vector<int>& lifts);

// The factor system of the lifts e_u + j(t_u): phi(u) + mu_{t_u},
// f + t_u + t_v - t_{u+v}, g + phi(u) t_v + t_u phi(v) + t_u t_v - t_{uv}.
FactorSystem change_lifts(const FactorSystem& fs, const std::vector<int>& t);

inline constexpr Int kEquivalenceGuard = 1000000;

// eta(j(b) + e_u) = j'(b - c(u)) + e'_u over least lifts e, e'.
struct Equivalence {
  std::vector<int> eta;  // E -> E'
  std::vector<int> c;    // Q -> B, c(0) = 0
};

// Searches every correction c for a ring map eta with eta j = j',
// p' eta = p and eps' eta = eps. Requires equal bases and quotients.
std::optional<Equivalence> equivalent(const Extension& a, const Extension& b, Int guard = kEquivalenceGuard);

// psi^* k for the reduced structure of a regular base, and whether it is a
// coboundary.
struct ObstructionDecision {
  RingHom psi;
  ReducedAnnCat reduced;
  Cochain3 obstruction;
  CoboundaryDecision decision;

  bool vanishes() const noexcept { return decision.coboundary; }
};

ObstructionDecision extension_obstruction(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi,
                                          Int guard = kCohomologyGuard);

struct ExtensionClasses {
  ObstructionDecision obstruction;
  Int h2_order = 0;
  std::vector<FactorSystem> factor_systems;
  std::vector<Extension> classes;
};

// One crossed product per class of H2(Q, Ker d) when the obstruction
// vanishes, built from the section defects and the functor cochains.
// Pairwise inequivalence is verified.
ExtensionClasses enumerate_extensions(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi,
                                      Int guard = kCohomologyGuard);

// Exhaustive search, independent of cohomology, over all ring tables on
// B x Q of the shape of an extension of type B -> D over psi: lifts x_u of
// psi(u) in D, f(u,v) and g(u,v) in the d-preimages of the defects of x.
struct RawSearch {
  Int candidates = 0;
  Int valid = 0;
  std::optional<Extension> first;
};

RawSearch raw_extension_search(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi,
                               bool stop_at_first = true);

// Unital ring maps Q -> R, by exhaustive search over maps fixing 0 and 1.
std::vector<std::vector<int>> unital_homs(const FiniteRing& q, const FiniteRing& r);

}  // namespace annring
