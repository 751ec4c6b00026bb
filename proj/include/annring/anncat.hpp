#pragma once

// The strict Ann-category of an E-system and its reduction to (Coker d,
// Ker d, k). Categories are never materialized: objects are elements of D, a
// morphism x -> y is an element b of B with y = d(b) + x, and every query is
// answered from the generating E-system.

#include <optional>
#include <string>
#include <vector>

#include "annring/check.hpp"
#include "annring/cochain.hpp"
#include "annring/crossed.hpp"

namespace annring {

struct Arrow {
  int source = 0;
  int b = 0;
  bool operator==(const Arrow&) const = default;
};

struct StrictAnnCat {
  ESystem es;

  int objects() const { return es.D->order(); }
  int target(const Arrow& a) const { return es.D->add(es.d[a.b], a.source); }
  // All b with y = d(b) + x, ascending.
  std::vector<int> hom(int x, int y) const;

  Arrow identity(int x) const { return {x, 0}; }
  // First a, then c; requires target(a) == c.source.
  Arrow then(const Arrow& a, const Arrow& c) const { return {a.source, es.B->add(a.b, c.b)}; }
  Arrow oplus(const Arrow& a, const Arrow& c) const { return {es.D->add(a.source, c.source), es.B->add(a.b, c.b)}; }
  // bb' + b theta_x' + theta_x b'
  Arrow otimes(const Arrow& a, const Arrow& c) const;
};

// Validates the E-system and wraps it.
StrictAnnCat build_anncat(const ESystem& es);
// Wraps without validation, for checking corrupted data.
StrictAnnCat wrap_anncat(ESystem es);

// Evaluates the strict Ann-category equations over all tuples: category laws,
// well-typedness of the operations, interchange for both operations, strict
// associativity, commutativity, units, zero and distributivity on arrows.
CheckReport anncat_axiom_check(const StrictAnnCat& cat);

// B = arrows out of 0 with the two operations, D = objects, theta by
// tensoring with identities.
ESystem anncat_to_esystem(const StrictAnnCat& cat);

// Ann-functor A_{B->D} -> A_{B'->D'} of a given form with constant
// constraint arrows Fplus (sum) and Ftimes (product), both in Ker d'.
struct AnnFunctor {
  StrictAnnCat source;
  StrictAnnCat target;
  ESysMorphism form;
  int fplus = 0;
  int ftimes = 0;

  Arrow apply(const Arrow& a) const { return {form.f0[a.source], form.f1[a.b]}; }
};

// Requires a valid E-system morphism and constants satisfying, for every
// object x, theta'_{Fx}(Ftimes) = (Ftimes)theta'_{Fx} = Ftimes and
// theta'_{Fx}(Fplus) = (Fplus)theta'_{Fx} = Fplus + Ftimes.
AnnFunctor functor_from_morphism(const StrictAnnCat& source, const StrictAnnCat& target, const ESysMorphism& m,
                                 int fplus = 0, int ftimes = 0);
// Evaluates functoriality, naturality of the constraints and their
// compatibility with the associativity and distributivity constraints.
CheckReport ann_functor_check(const AnnFunctor& f);
// Throws unless F(0) = 0', F(1) = 1' and the form is an E-system morphism.
ESysMorphism morphism_from_functor(const AnnFunctor& f);
// alpha = Gplus - Fplus when the forms agree, with naturality and both
// compatibility squares verified; nullopt for different forms.
std::optional<int> homotopy_between(const AnnFunctor& f, const AnnFunctor& g);

// A stick: representatives sigma(s) of the classes of Coker d and defect
// arrows with d(phi_plus(s,r)) = sigma(s) + sigma(r) - sigma(s+r),
// d(phi_times(s,r)) = sigma(s)sigma(r) - sigma(sr).
struct Section {
  std::vector<int> sigma;      // class -> element of D
  std::vector<int> phi_plus;   // [s * n + r], elements of B
  std::vector<int> phi_times;  // [s * n + r], elements of B
  bool operator==(const Section&) const = default;
};

enum class SectionChoice {
  least,     // least coset elements and least preimages
  greatest,  // greatest coset elements and preimages, normalized slots kept 0
};

Section choose_section(const ESystem& es, SectionChoice choice = SectionChoice::least);
Section choose_section(const ESystem& es, const KernelModule& km, SectionChoice choice = SectionChoice::least);
void validate_section(const ESystem& es, const KernelModule& km, const Section& sec);

// (R, M, k) with M a bimodule over R and k valued in M.
struct ReducedAnnCat {
  Bimodule M;
  Cochain3 k;

  const FiniteRing& R() const { return *M.ring; }
};

// Coherence diagrams of an Ann-category of type (R, M), each as an equation
// in M at every tuple of objects.
CheckReport reduced_axiom_check(const ReducedAnnCat& rc);

// Requires a regular E-system. The result passes reduced_axiom_check
// (enforced) and k is d2 of the defects with R acting through theta_sigma.
ReducedAnnCat reduce(const ESystem& es, const Section& sec);
ReducedAnnCat reduce(const ESystem& es);

// Structure transported along sticks, valued in B: the defects' coboundary.
Cochain3 defect_coboundary(const ESystem& es, const KernelModule& km, const Section& sec);

struct ReducedFunctor {
  RingHom p;             // Coker d -> Coker d'
  std::vector<int> q;    // Ker d module index -> Ker d' module index
  Cochain2 g;            // values in Ker d' (module indices), over Coker d
};

// Reduction of an Ann-functor between associated categories, with
// q_* k - p^* k' = d2(g) verified.
ReducedFunctor reduce_functor(const AnnFunctor& f, const Section& source_sec, const Section& target_sec);
ReducedFunctor reduce_functor(const AnnFunctor& f);

}  // namespace annring
