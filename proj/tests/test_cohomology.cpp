#include <gtest/gtest.h>

#include <random>
#include <set>

#include "annring/cohomology.hpp"
#include "annring/corpus.hpp"
#include "annring/error.hpp"

using namespace annring;

namespace {

Bimodule z2_identity() { return regular_bimodule(zmod(2)); }

// Z/2 acting by zero on Z/2; not unital, so built without validation.
Bimodule z2_zero_action() {
  const RingPtr z2 = zmod(2);
  return Bimodule{z2, additive_group(*z2), {0, 0, 0, 0}, {0, 0, 0, 0}};
}

Bimodule trivial_module(const RingPtr& r) {
  const int n = r->order();
  return validate_bimodule(r, TableGroup({0}, 1), std::vector<int>(n, 0), std::vector<int>(n, 0));
}

std::vector<Bimodule> sample_modules() {
  const RingPtr z2 = zmod(2), z4 = zmod(4);
  return {z2_identity(), regular_bimodule(z4), bimodule_via(z4, z2, {0, 1, 0, 1}),
          regular_bimodule(product(z2, z2)), regular_bimodule(zmod(3))};
}

Cochain1 random_c1(const Bimodule& m, std::mt19937& rng) {
  const int n = m.ring->order();
  std::uniform_int_distribution<int> val(0, m.module.order() - 1);
  Cochain1 t = Cochain1::zero(n);
  for (int u = 1; u < n; ++u) t.t[u] = val(rng);
  return t;
}

// Normalized at 0; with unit_normal also g(1, .) = g(., 1) = 0.
Cochain2 random_c2(const Bimodule& m, std::mt19937& rng, bool unit_normal) {
  const int n = m.ring->order();
  const int one = m.ring->unit().value_or(-1);
  std::uniform_int_distribution<int> val(0, m.module.order() - 1);
  Cochain2 c = Cochain2::zero(n);
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) {
      c.f[u * n + v] = val(rng);
      if (!unit_normal || (u != one && v != one)) c.g[u * n + v] = val(rng);
    }
  return c;
}

bool is_zero(const Cochain3& k) { return k == Cochain3::zero(k.n); }

// Brute force over all normalized 2-cochains and 1-cochains: (|Z2|, |B2|).
std::pair<Int, Int> brute_force(const Bimodule& m) {
  const int n = m.ring->order(), nm = m.module.order();
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) slots.push_back({u, v});
  Int z = 0;
  const std::size_t total = slots.size() * 2;
  std::vector<int> digits(total, 0);
  for (;;) {
    Cochain2 c = Cochain2::zero(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      c.f[slots[i].first * n + slots[i].second] = digits[i];
      c.g[slots[i].first * n + slots[i].second] = digits[slots.size() + i];
    }
    if (is_zero(d2(m, c))) ++z;
    std::size_t i = 0;
    while (i < total && ++digits[i] == nm) digits[i++] = 0;
    if (i == total) break;
  }
  std::set<std::pair<std::vector<int>, std::vector<int>>> b;
  std::vector<int> t(n - 1, 0);
  for (;;) {
    Cochain1 c = Cochain1::zero(n);
    for (int u = 1; u < n; ++u) c.t[u] = t[u - 1];
    Cochain2 img = d1(m, c);
    b.insert({img.f, img.g});
    int i = 0;
    while (i < n - 1 && ++t[i] == nm) t[i++] = 0;
    if (i == n - 1) break;
  }
  return {z, static_cast<Int>(b.size())};
}

}  // namespace

TEST(Coboundaries, D1TwoElementExample) {
  Cochain1 t{2, {0, 1}};
  Cochain2 c = d1(z2_identity(), t);
  EXPECT_EQ(c.at_f(1, 1), 0);
  EXPECT_EQ(c.at_g(1, 1), 1);
  EXPECT_EQ(d1(z2_identity(), Cochain1::zero(2)), Cochain2::zero(2));
}

TEST(Coboundaries, D1OfAdditiveMapHasZeroFPart) {
  const Bimodule m = regular_bimodule(zmod(4));
  Cochain1 t{4, {0, 2, 0, 2}};  // x -> 2x
  Cochain2 c = d1(m, t);
  for (int x : c.f) EXPECT_EQ(x, 0);
}

TEST(Coboundaries, D2OfF11IsZero) {
  Cochain2 c = Cochain2::zero(2);
  c.f[3] = 1;
  EXPECT_TRUE(is_zero(d2(z2_identity(), c)));
  EXPECT_TRUE(is_zero(d2(z2_identity(), Cochain2::zero(2))));
}

TEST(Coboundaries, D2AfterD1IsZero) {
  std::mt19937 rng(20261014);
  const std::vector<Bimodule> mods = sample_modules();
  for (int trial = 0; trial < 1000; ++trial) {
    const Bimodule& m = mods[trial % 3];
    EXPECT_TRUE(is_zero(d2(m, d1(m, random_c1(m, rng)))));
  }
  for (const ESystem& es : corpus()) {
    if (!is_regular(es)) continue;
    const Bimodule m = induced_kernel_module(es).module;
    for (int trial = 0; trial < 20; ++trial) EXPECT_TRUE(is_zero(d2(m, d1(m, random_c1(m, rng))))) << es.name;
  }
}

TEST(Complex, MatricesMatchTables) {
  std::mt19937 rng(7);
  for (const Bimodule& m : sample_modules())
    for (bool unit : {false, true}) {
      const CochainComplex cx(m, unit);
      for (int trial = 0; trial < 20; ++trial) {
        const Cochain1 t = random_c1(m, rng);
        Cochain1 tu = t;
        if (unit) tu.t[*m.ring->unit()] = 0;
        EXPECT_EQ(cx.decode1(cx.encode(tu)), tu);
        EXPECT_EQ(cx.decode2(cx.d1_map().apply(cx.encode(tu))), d1(m, tu));
        const Cochain2 c = random_c2(m, rng, unit);
        EXPECT_EQ(cx.decode2(cx.encode(c)), c);
        EXPECT_EQ(cx.decode3(cx.d2_map().apply(cx.encode(c))), d2(m, c));
      }
    }
}

TEST(H2, IdentityActionOnZ2) {
  H2Result h = h2(z2_identity());
  EXPECT_EQ(h.z_order, 4);
  EXPECT_EQ(h.b_order, 2);
  EXPECT_EQ(h.order, 2);
  EXPECT_EQ(h.invariant_factors, (Vec{2}));
  EXPECT_EQ(h.unit_order, 2);
  ASSERT_EQ(h.representatives.size(), 2u);
  EXPECT_EQ(h.representatives[0], Cochain2::zero(2));
  EXPECT_TRUE(is_zero(d2(z2_identity(), h.representatives[1])));
  EXPECT_EQ(brute_force(z2_identity()), (std::pair<Int, Int>{4, 2}));
}

TEST(H2, ZeroActionMatchesBruteForce) {
  const Bimodule m = z2_zero_action();
  const auto [z, b] = brute_force(m);
  H2Result h = h2(m);
  EXPECT_EQ(h.z_order, z);
  EXPECT_EQ(h.b_order, b);
  EXPECT_EQ(h.order, z / b);
  EXPECT_EQ(h.order, 1);
}

TEST(H2, TrivialModule) {
  H2Result h = h2(trivial_module(zmod(2)));
  EXPECT_EQ(h.order, 1);
  EXPECT_TRUE(h.invariant_factors.empty());
  EXPECT_EQ(h.representatives.size(), 1u);
}

TEST(H2, MatchesBruteForceOnZ3AndZ4) {
  for (const Bimodule& m : {regular_bimodule(zmod(3)), bimodule_via(zmod(4), zmod(2), {0, 1, 0, 1})}) {
    const auto [z, b] = brute_force(m);
    H2Result h = h2(m);
    EXPECT_EQ(h.z_order, z) << m.ring->name();
    EXPECT_EQ(h.b_order, b) << m.ring->name();
    EXPECT_EQ(h.order * h.b_order, h.z_order);
  }
}

TEST(H2, BoundariesAreCyclesAndOrdersMultiply) {
  for (const Bimodule& m : sample_modules()) {
    const CochainComplex cx(m);
    for (const Cochain2& b : b2(cx).generators) EXPECT_TRUE(is_zero(d2(m, b)));
    for (const Cochain2& z : z2(cx).generators) EXPECT_TRUE(is_zero(d2(m, z)));
    H2Result h = h2(m);
    EXPECT_EQ(h.z_order, h.order * h.b_order);
    EXPECT_EQ(h.order, h.unit_order) << m.ring->name();
    EXPECT_EQ(h.invariant_factors, h.unit_invariant_factors);
  }
}

TEST(H2, GuardRejectsLargeSystems) {
  EXPECT_THROW(h2(regular_bimodule(zmod(4)), 10), GuardError);
}

TEST(Structures, UnitNormalizedCoboundariesPassTheChecker) {
  std::mt19937 rng(11);
  for (const Bimodule& m : sample_modules())
    for (int trial = 0; trial < 10; ++trial) {
      const Cochain2 c = random_c2(m, rng, true);
      CheckReport rep = reduced_axiom_check({m, d2(m, c)});
      EXPECT_TRUE(rep.ok()) << m.ring->name() << ": " << (rep.ok() ? "" : rep.failures[0].equation);
    }
}

TEST(Structures, CoboundaryWithUnitSlotBreaksTheUnitTriangle) {
  // g(1, 1) = 1 over Z/4 gives alpha(1, 1, 2) = g(1, 2) - g(1, 1) 2 = -2.
  const Bimodule m = regular_bimodule(zmod(4));
  Cochain2 c = Cochain2::zero(4);
  c.g[1 * 4 + 1] = 1;
  CheckReport rep = reduced_axiom_check({m, d2(m, c)});
  EXPECT_NE(rep.find("product unit triangle"), nullptr);
}

TEST(Pullback, IdentityAndFunctoriality) {
  const RingPtr z2 = zmod(2), z4 = zmod(4), kl = product(z2, z2);
  const RingHom psi = validate_hom(kl, z2, {0, 0, 1, 1}, true);
  const RingHom chi = validate_hom(z4, kl, {0, 3, 0, 3}, true);
  const ReducedAnnCat rc = reduce(twob_esystem());
  ASSERT_EQ(*rc.M.ring, *z2);
  EXPECT_EQ(pullback3(identity_hom(rc.M.ring), rc.k), rc.k);
  EXPECT_EQ(pullback3(compose(psi, chi), rc.k), pullback3(chi, pullback3(psi, rc.k)));
  std::mt19937 rng(3);
  const Cochain2 c = random_c2(rc.M, rng, false);
  EXPECT_EQ(pullback2(compose(psi, chi), c), pullback2(chi, pullback2(psi, c)));

  const Bimodule mq = pullback_bimodule(psi, rc.M);
  EXPECT_TRUE(reduced_axiom_check({mq, pullback3(psi, rc.k)}).ok());
  // Pullback commutes with d2.
  EXPECT_EQ(pullback3(psi, d2(rc.M, c)), d2(mq, pullback2(psi, c)));
}

TEST(IsCoboundary, ZeroAndImages) {
  const Bimodule m = regular_bimodule(zmod(4));
  CoboundaryDecision z = is_coboundary3(m, Cochain3::zero(4));
  ASSERT_TRUE(z.coboundary);
  EXPECT_TRUE(is_zero(d2(m, *z.witness)));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Cochain3 k = d2(m, random_c2(m, rng, false));
    CoboundaryDecision dec = is_coboundary3(m, k);
    ASSERT_TRUE(dec.coboundary);
    EXPECT_EQ(d2(m, *dec.witness), k);
  }
}

TEST(IsCoboundary, CertificateForNonImage) {
  Cochain3 k = Cochain3::zero(2);
  k.xi[k.idx3(1, 1, 1)] = 1;  // d2 has xi = 0 over Z/2
  CoboundaryDecision dec = is_coboundary3(z2_identity(), k);
  EXPECT_FALSE(dec.coboundary);
  EXPECT_FALSE(dec.witness.has_value());
  bool nonzero = false;
  for (Int x : dec.certificate) nonzero = nonzero || x != 0;
  EXPECT_TRUE(nonzero);
  EXPECT_EQ(dec.certificate.size(), dec.cokernel_factors.size());
}

TEST(IsCoboundary, RejectsUnnormalizedInput) {
  Cochain3 k = Cochain3::zero(2);
  k.eta[0 * 2 + 1] = 1;
  EXPECT_THROW(is_coboundary3(z2_identity(), k), AxiomError);
}

TEST(Classify, ZeroStructureOnZ2HasTwoClasses) {
  const ReducedAnnCat rc{z2_identity(), Cochain3::zero(2)};
  FunctorClassification fc = classify_functors(identity_hom(rc.M.ring), rc);
  EXPECT_TRUE(fc.decision.coboundary);
  EXPECT_EQ(fc.h2_order, 2);
  ASSERT_EQ(fc.representatives.size(), 2u);
  for (const Cochain2& g : fc.representatives) EXPECT_TRUE(is_zero(d2(rc.M, g)));
}

TEST(Classify, TrivialModuleHasOneClass) {
  const ReducedAnnCat rc = reduce(corpus_entry("ex3-2z4"));
  FunctorClassification fc = classify_functors(identity_hom(rc.M.ring), rc);
  EXPECT_EQ(fc.representatives.size(), 1u);
}

TEST(Classify, RepresentativesSolveTheObstructionEquation) {
  for (const ESystem& es : corpus()) {
    if (!is_regular(es)) continue;
    const ReducedAnnCat rc = reduce(es);
    FunctorClassification fc = classify_functors(identity_hom(rc.M.ring), rc);
    ASSERT_TRUE(fc.decision.coboundary) << es.name;
    EXPECT_EQ(fc.representatives.size(), static_cast<std::size_t>(fc.h2_order));
    for (const Cochain2& g : fc.representatives) EXPECT_EQ(d2(rc.M, g), neg(rc.M, rc.k)) << es.name;
  }
}

TEST(SectionIndependence, DifferenceIsACoboundary) {
  for (const ESystem& es : corpus()) {
    if (!is_regular(es) || induced_kernel_module(es).kernel.size() == 1) continue;
    const ReducedAnnCat a = reduce(es, choose_section(es, SectionChoice::least));
    const ReducedAnnCat b = reduce(es, choose_section(es, SectionChoice::greatest));
    CoboundaryDecision dec = is_coboundary3(a.M, sub(a.M, a.k, b.k));
    ASSERT_TRUE(dec.coboundary) << es.name;
    EXPECT_EQ(d2(a.M, *dec.witness), sub(a.M, a.k, b.k));
  }
}
