#pragma once

// Low-degree cohomology of a ring R with coefficients in an R-bimodule M:
// cochains normalized at 0, the coboundaries d1: C1 -> C2 and d2: C2 -> C3,
// Z2, B2, H2, pullback along ring maps and membership in the image of d2.

#include <cstdint>
#include <optional>
#include <vector>

#include "annring/ablin.hpp"
#include "annring/anncat.hpp"
#include "annring/cochain.hpp"
#include "annring/ring.hpp"

namespace annring {

inline constexpr Int kCohomologyGuard = 10000;

Cochain2 d1(const Bimodule& m, const Cochain1& t);
Cochain3 d2(const Bimodule& m, const Cochain2& c);

// Pointwise group operations on cochains with values in M.
Cochain2 add(const Bimodule& m, const Cochain2& a, const Cochain2& b);
Cochain2 neg(const Bimodule& m, const Cochain2& a);
Cochain3 add(const Bimodule& m, const Cochain3& a, const Cochain3& b);
Cochain3 sub(const Bimodule& m, const Cochain3& a, const Cochain3& b);
Cochain3 neg(const Bimodule& m, const Cochain3& a);

// Throws AxiomError if a value is not an element of M or a slot with an
// argument 0 is nonzero.
void check_normalized(const Bimodule& m, const Cochain1& t);
void check_normalized(const Bimodule& m, const Cochain2& c);
void check_normalized(const Bimodule& m, const Cochain3& k);

// d1 and d2 as homomorphisms of finite abelian groups. A cochain is a vector
// of M-coordinates over its free slots: t(u) for u != 0 (and u != 1 when
// unit-normalized), f(u, v) then g(u, v) for u, v != 0 (g also avoiding 1
// when unit-normalized), and for C3 every component over nonzero arguments.
class CochainComplex {
 public:
  // Throws GuardError when C2 or C3 needs more than guard coordinates.
  explicit CochainComplex(Bimodule m, bool unit_normalized = false, Int guard = kCohomologyGuard);

  const Bimodule& coefficients() const noexcept { return m_; }
  const FiniteRing& ring() const noexcept { return *m_.ring; }
  bool unit_normalized() const noexcept { return unit_normalized_; }

  const ablin::FinAbGroup& c1() const noexcept { return d1_.source(); }
  const ablin::FinAbGroup& c2() const noexcept { return d2_.source(); }
  const ablin::FinAbGroup& c3() const noexcept { return d2_.target(); }
  const ablin::LinearMap& d1_map() const noexcept { return d1_; }
  const ablin::LinearMap& d2_map() const noexcept { return d2_; }

  Vec encode(const Cochain1& t) const;
  Vec encode(const Cochain2& c) const;  // ignores slots outside the complex
  Vec encode(const Cochain3& k) const;
  Cochain1 decode1(std::span<const Int> x) const;
  Cochain2 decode2(std::span<const Int> x) const;
  Cochain3 decode3(std::span<const Int> x) const;

 private:
  struct Slot2 {
    bool g;
    int u, v;
  };

  Bimodule m_;
  bool unit_normalized_;
  std::vector<int> slots1_;
  std::vector<Slot2> slots2_;
  ablin::LinearMap d1_;
  ablin::LinearMap d2_;
};

// A subgroup of C2 presented by cyclic generators.
struct CochainSubgroup {
  Int order = 1;
  Vec invariant_factors;
  std::vector<Cochain2> generators;
};

CochainSubgroup z2(const CochainComplex& cx);
CochainSubgroup b2(const CochainComplex& cx);

struct H2Result {
  Int z_order = 1;
  Int b_order = 1;
  Int order = 1;
  Vec invariant_factors;                 // nontrivial cyclic factors
  std::vector<Cochain2> generators;      // cocycles, one per factor
  std::vector<Cochain2> representatives; // one cocycle per class, class 0 first
  // The same group computed from unit-normalized cochains.
  Int unit_order = 1;
  Vec unit_invariant_factors;
};

// Throws GuardError if |H2| exceeds guard (representatives are listed).
H2Result h2(const Bimodule& m, Int guard = kCohomologyGuard);

// M viewed as a Q-bimodule through psi: Q -> R.
Bimodule pullback_bimodule(const RingHom& psi, const Bimodule& m);
// (psi^* c)(u, ...) = c(psi u, ...).
Cochain2 pullback2(const RingHom& psi, const Cochain2& c);
Cochain3 pullback3(const RingHom& psi, const Cochain3& k);

// Either a witness c with d2(c) = k, or the nonzero image of k in
// C3 / im d2 (coordinates in the invariant-factor cokernel) certifying that
// no witness exists.
struct CoboundaryDecision {
  bool coboundary = false;
  std::optional<Cochain2> witness;
  Vec certificate;
  Vec cokernel_factors;
};

CoboundaryDecision is_coboundary3(const Bimodule& m, const Cochain3& k, Int guard = kCohomologyGuard);

// Homotopy classes of Ann-functors (Q, 0) -> (R, M, k) over psi. When
// psi^* k is a coboundary, one cochain g with d2(g) = -psi^* k per class of
// H2(Q, M_psi), particular solution first.
struct FunctorClassification {
  Cochain3 obstruction;  // psi^* k over Q
  CoboundaryDecision decision;
  std::vector<Cochain2> representatives;
  Int h2_order = 0;
};

FunctorClassification classify_functors(const RingHom& psi, const ReducedAnnCat& rc, Int guard = kCohomologyGuard);

// Seeded spot check of the complex: d2 d1 t = 0 on random 1-cochains, the
// generators of B2 are cycles, and d2 of random unit-normalized 2-cochains
// passes reduced_axiom_check (the last only for a unital R).
struct ComplexCheck {
  int trials = 0;
  int d2d1_failures = 0;
  bool b2_in_z2 = true;
  int reduced_trials = 0;
  int reduced_failures = 0;
  std::optional<Failure> first_reduced_failure;

  bool ok() const noexcept { return d2d1_failures == 0 && b2_in_z2 && reduced_failures == 0; }
};

ComplexCheck check_complex(const Bimodule& m, std::uint64_t seed, int trials, Int guard = kCohomologyGuard);

}  // namespace annring
