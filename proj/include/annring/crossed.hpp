#pragma once

// E-systems (B, D, d, theta) and crossed bimodules (B, D, d) over finite rings.

#include <optional>
#include <string>
#include <vector>

#include "annring/bimult.hpp"
#include "annring/ring.hpp"

namespace annring {

// theta[x] is the bimultiplication theta_x of B. Instances are only
// guaranteed to satisfy the axioms after validate_esystem.
struct ESystem {
  std::string name;
  RingPtr B;
  RingPtr D;
  std::vector<int> d;                    // B -> D
  std::vector<Bimultiplication> theta;   // D -> M_B

  int theta_left(int x, int b) const { return theta[x].left[b]; }    // theta_x b
  int theta_right(int b, int x) const { return theta[x].right[b]; }  // b theta_x

  bool operator==(const ESystem& o) const {
    return *B == *o.B && *D == *o.D && d == o.d && theta == o.theta;
  }
};

ESystem validate_esystem(ESystem es);
RingHom d_hom(const ESystem& es);

struct RegularityWitness {
  std::string reason;  // "theta(1) is not the identity" or "theta(x), theta(y) not permutable"
  int x = 0;
  int y = 0;
  int a = 0;
};

std::optional<RegularityWitness> regularity_witness(const ESystem& es);
bool is_regular(const ESystem& es);

// The additive group of B with a D-bimodule structure and d: B -> D.
struct CrossedBimodule {
  std::string name;
  std::string b_name;
  int b_order = 0;
  std::vector<int> b_add;  // b_order^2
  RingPtr D;
  std::vector<int> d;
  std::vector<int> left;   // left[x * |B| + b] = x b
  std::vector<int> right;  // right[b * |D| + x] = b x

  int act_left(int x, int b) const { return left[x * b_order + b]; }
  int act_right(int b, int x) const { return right[b * D->order() + x]; }

  bool operator==(const CrossedBimodule& o) const {
    return b_order == o.b_order && b_add == o.b_add && *D == *o.D && d == o.d && left == o.left && right == o.right;
  }
};

CrossedBimodule validate_crossed_bimodule(CrossedBimodule xb);

CrossedBimodule es_to_xb(const ESystem& es);  // throws AxiomError unless regular
ESystem xb_to_es(const CrossedBimodule& xb);

// Morphisms (f1, f0) of E-systems and (k1, k0) of crossed bimodules.
struct ESysMorphism {
  std::vector<int> f1;  // B -> B'
  std::vector<int> f0;  // D -> D'
  bool operator==(const ESysMorphism&) const = default;
};

struct XBMorphism {
  std::vector<int> k1;
  std::vector<int> k0;
  bool operator==(const XBMorphism&) const = default;
};

ESysMorphism validate_morphism(const ESystem& src, const ESystem& tgt, ESysMorphism m);
XBMorphism validate_xb_morphism(const CrossedBimodule& src, const CrossedBimodule& tgt, XBMorphism m);
XBMorphism morphism_to_xb(const ESystem& src, const ESystem& tgt, const ESysMorphism& m);
ESysMorphism morphism_to_es(const CrossedBimodule& src, const CrossedBimodule& tgt, const XBMorphism& m);
ESysMorphism identity_morphism(const ESystem& es);
ESysMorphism compose(const ESysMorphism& g, const ESysMorphism& f);  // g after f
XBMorphism compose(const XBMorphism& g, const XBMorphism& f);

// Ker d as a Coker d-bimodule, sa = theta_x a for any x in s.
struct KernelModule {
  Quotient coker;
  std::vector<int> kernel;  // elements of B, kernel[i] is module element i
  std::vector<int> kernel_index;  // element of B -> module index or -1
  Bimodule module;
};

// Verifies Ker d inside the bicenter, Im d an ideal, and independence of the
// action from representatives; throws on failure.
KernelModule induced_kernel_module(const ESystem& es);

// Presets: an ideal I -> D with theta by multiplication, a bimodule M -> R
// with d = 0, and the inner-bimultiplication map B -> M_B.
ESystem example3(const RingPtr& d_ring, const std::vector<int>& ideal, const std::string& name);
ESystem example4(const Bimodule& module, const std::string& name);
ESystem example5(const RingPtr& b, const std::string& name);
// B = (Z/4, a*b = 2ab), D = Z/4, d(b) = 2b, theta_x = multiplication by x.
ESystem twob_esystem();

// theta given by an R-bimodule action on the additive group of B.
std::vector<Bimultiplication> theta_from_action(const FiniteRing& b, const FiniteRing& d,
                                                const std::vector<int>& left, const std::vector<int>& right);

}  // namespace annring
