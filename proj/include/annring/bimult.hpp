#pragma once

// Bimultiplications of a finite ring B: pairs (b -> sb, b -> bs) of additive
// self-maps behaving like multiplication by a virtual element s.

#include <optional>
#include <string>
#include <vector>

#include "annring/ring.hpp"

namespace annring {

struct Bimultiplication {
  std::vector<int> left;   // b -> s b
  std::vector<int> right;  // b -> b s

  auto operator<=>(const Bimultiplication&) const = default;
};

// Throws AxiomError naming the failing law.
void check_bimultiplication(const FiniteRing& b, const Bimultiplication& s);

Bimultiplication inner(const FiniteRing& b, int c);
Bimultiplication zero_bimult(const FiniteRing& b);
Bimultiplication identity_bimult(const FiniteRing& b);

// Pointwise sum, and composition (st)b = s(tb), b(st) = (bs)t.
Bimultiplication bimult_add(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t);
Bimultiplication bimult_mul(const Bimultiplication& s, const Bimultiplication& t);

// s(at) = (sa)t and t(as) = (ta)s for all a. On failure, the witness a.
std::optional<int> permutability_witness(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t);
bool permutable(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t);

std::vector<int> bicenter(const FiniteRing& b);

struct BimultRing {
  RingPtr base;
  std::vector<Bimultiplication> elements;  // lexicographic; index 0 is zero
  RingPtr ring;

  int index_of(const Bimultiplication& s) const;
};

inline constexpr int kMaxBimultBase = 16;

// All additive endomaps of B, lexicographic by table.
std::vector<std::vector<int>> additive_endomorphisms(const FiniteRing& b);

BimultRing enumerate_bimult(const RingPtr& b);

// The homomorphism c -> mu_c into an enumerated M_B.
RingHom inner_hom(const BimultRing& mb);

}  // namespace annring
