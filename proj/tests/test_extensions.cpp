#include <gtest/gtest.h>

#include <set>

#include "annring/corpus.hpp"
#include "annring/error.hpp"
#include "annring/extensions.hpp"

using namespace annring;

namespace {

ESystem ex4() { return corpus_entry("ex4-z2"); }

Extension z4_extension() { return validate_extension(ex4(), zmod(4), zmod(2), {0, 2}, {0, 1, 0, 1}, {0, 1, 0, 1}); }

// Z/2[x]/(x^2) with index a + 2b for a + bx.
Extension dual_extension() {
  return validate_extension(ex4(), dual_numbers_z2(), zmod(2), {0, 2}, {0, 1, 0, 1}, {0, 1, 0, 1});
}

FactorSystem z2_factor_system(int f11, int g11) {
  const RingPtr b = zero_mult(2);
  return {b, zmod(2), {zero_bimult(*b), identity_bimult(*b)}, {0, 0, 0, f11}, {0, 0, 0, g11}};
}

std::vector<int> eps_of_lifts(const Extension& ext, const std::vector<int>& lifts) {
  std::vector<int> x;
  for (int e : lifts) x.push_back(ext.eps[e]);
  return x;
}

Bimultiplication pair(const std::vector<int>& left, const std::vector<int>& right) { return {left, right}; }

}  // namespace

TEST(Extension, ValidExamples) {
  EXPECT_NO_THROW(z4_extension());
  EXPECT_NO_THROW(dual_extension());
}

TEST(Extension, KleinWithNonSquareZeroIdealIsRejected) {
  // Z/2 x Z/2 with index 2r + s and j(1) = (0, 1), an idempotent.
  const RingPtr kl = product(zmod(2), zmod(2));
  try {
    validate_extension(ex4(), kl, zmod(2), {0, 1}, {0, 0, 1, 1}, {0, 0, 1, 1});
    FAIL() << "expected rejection";
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.axiom(), "j: multiplicativity");
  }
}

TEST(Extension, EpsMustBeCompatibleWithTheta) {
  // eps = 0 forgets the unit and fails the unital-map check.
  EXPECT_THROW(validate_extension(ex4(), zmod(4), zmod(2), {0, 2}, {0, 1, 0, 1}, {0, 0, 0, 0}), AxiomError);
  // p not vanishing on j(B).
  EXPECT_THROW(validate_extension(ex4(), zmod(4), zmod(2), {0, 2}, {0, 1, 1, 0}, {0, 1, 0, 1}), AxiomError);
}

TEST(InducedPsi, Examples) {
  EXPECT_EQ(induced_psi(z4_extension()).map, (std::vector<int>{0, 1}));
  // Coker d trivial: Z/4 x Z/2 over the ideal Z/4 x 0.
  const ESystem base = corpus_entry("ex3-z4");
  const RingPtr e = product(zmod(4), zmod(2));
  std::vector<int> j{0, 2, 4, 6}, p, eps;
  for (int x = 0; x < 8; ++x) {
    p.push_back(x % 2);
    eps.push_back(x / 2);
  }
  Extension ext = validate_extension(base, e, zmod(2), j, p, eps);
  RingHom psi = induced_psi(ext);
  EXPECT_EQ(psi.map, (std::vector<int>{0, 0}));
  EXPECT_EQ(psi.target->order(), 1);
}

TEST(CrossedProduct, Z2Examples) {
  CrossedProduct a = crossed_product(z2_factor_system(1, 0));
  EXPECT_EQ(max_additive_order(*a.E), 4);
  EXPECT_TRUE(find_isomorphism(*a.E, *zmod(4)).has_value());
  CrossedProduct b = crossed_product(z2_factor_system(0, 0));
  EXPECT_EQ(max_additive_order(*b.E), 2);
  EXPECT_TRUE(find_isomorphism(*b.E, *dual_numbers_z2()).has_value());
  EXPECT_EQ(a.E->order(), 4);
}

TEST(CrossedProduct, ConditionsAreReported) {
  FactorSystem fs = z2_factor_system(0, 0);
  fs.f[1] = 1;  // f(0, 1) != 0
  EXPECT_NE(check_factor_system(fs).find("normalized at 0"), nullptr);
  FactorSystem half = z2_factor_system(0, 0);
  half.phi[1] = zero_bimult(*half.B);
  CheckReport rep = check_factor_system(half);
  EXPECT_NE(rep.find("phi(1) is the identity"), nullptr);
  EXPECT_EQ(rep.failures.size(), 1u);
  EXPECT_THROW(crossed_product(half), AxiomError);
}

TEST(CrossedProduct, KleinRegularIffAssociative) {
  // B = Klein zero ring, Q = Z/2 x Z/2 (index 2r + s), f = g = 0,
  // phi(1,0) = (P, R), phi(0,1) = (1 - P, 1 - R) for idempotent P, R.
  const RingPtr b = zero_mult_klein();
  const RingPtr q = product(zmod(2), zmod(2));
  std::vector<std::vector<int>> idem;
  for (const auto& m : additive_endomorphisms(*b)) {
    bool ok = true;
    for (int x = 0; x < 4; ++x) ok = ok && m[m[x]] == m[x];
    if (ok) idem.push_back(m);
  }
  ASSERT_EQ(idem.size(), 8u);
  auto complement = [&](const std::vector<int>& m) {
    std::vector<int> c(4);
    for (int x = 0; x < 4; ++x) c[x] = b->sub(x, m[x]);
    return c;
  };
  int regular = 0, failing = 0;
  for (const auto& P : idem)
    for (const auto& R : idem) {
      FactorSystem fs{b, q, {}, std::vector<int>(16, 0), std::vector<int>(16, 0)};
      fs.phi = {zero_bimult(*b), pair(complement(P), complement(R)), pair(P, R), identity_bimult(*b)};
      bool commute = true;
      for (int x = 0; x < 4; ++x) commute = commute && P[R[x]] == R[P[x]];
      const CheckReport rep = check_factor_system(fs);
      EXPECT_EQ(rep.ok(), commute);
      if (commute) {
        ++regular;
        CrossedProduct cp = crossed_product(fs);  // validated ring of order 16
        EXPECT_EQ(cp.E->order(), 16);
        continue;
      }
      ++failing;
      const RingTables t = crossed_product_tables(fs);
      try {
        crossed_product(fs);
        ADD_FAILURE() << "non-permutable phi accepted";
      } catch (const AxiomError& e) {
        EXPECT_EQ(e.axiom(), "multiplicative associativity");
        int x, y, z;
        ASSERT_EQ(std::sscanf(e.witness().c_str(), "(%d,%d,%d)", &x, &y, &z), 3);
        auto mul = [&](int i, int k) { return t.mul[i * 16 + k]; };
        EXPECT_NE(mul(mul(x, y), z), mul(x, mul(y, z)));
      }
      EXPECT_THROW(validate_ring(t), AxiomError);
    }
  EXPECT_GT(regular, 0);
  EXPECT_GT(failing, 0);
}

TEST(CrossedProduct, KleinOverZ2AllCocyclesAssociative) {
  const RingPtr b = zero_mult_klein();
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) {
      FactorSystem fs{b, zmod(2), {zero_bimult(*b), identity_bimult(*b)}, {0, 0, 0, f}, {0, 0, 0, g}};
      EXPECT_TRUE(check_factor_system(fs).ok());
      EXPECT_NO_THROW(validate_ring(crossed_product_tables(fs)));
    }
}

TEST(FactorSystem, FromZ4Lifts) {
  const Extension ext = z4_extension();
  for (int lift : {1, 3}) {
    FactorSystem fs = factor_system_from_extension(ext, {0, lift});
    EXPECT_EQ(fs.f[3], 1) << lift;
    EXPECT_EQ(fs.g[3], lift == 1 ? 0 : 1) << lift;  // e_1 e_1 - e_1 is 0 or 6
    EXPECT_TRUE(check_factor_system(fs).ok());
  }
  FactorSystem split = factor_system_from_extension(dual_extension(), {0, 1});
  EXPECT_EQ(split.f, (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(split.g, (std::vector<int>{0, 0, 0, 0}));
}

TEST(FactorSystem, RoundTripIsEquivalent) {
  for (const Extension& ext : {z4_extension(), dual_extension()}) {
    const std::vector<int> lifts = least_lifts(ext);
    const FactorSystem fs = factor_system_from_extension(ext, lifts);
    const Extension back = crossed_product_extension(ext.base, fs, eps_of_lifts(ext, lifts));
    EXPECT_TRUE(equivalent(back, ext).has_value());
  }
}

TEST(FactorSystem, LiftsWithEqualEpsDifferByD1) {
  const Extension ext = z4_extension();
  const FactorSystem a = factor_system_from_extension(ext, {0, 1});
  const FactorSystem b = factor_system_from_extension(ext, {0, 3});
  // t(1) = j^{-1}(3 - 1) = 1 in Ker d = B.
  const KernelModule km = induced_kernel_module(ext.base);
  const Bimodule m = pullback_bimodule(induced_psi(ext), km.module);
  const Cochain2 dt = d1(m, Cochain1{2, {0, 1}});
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(b.f[i], ext.base.B->add(a.f[i], km.kernel[dt.f[i]]));
    EXPECT_EQ(b.g[i], ext.base.B->add(a.g[i], km.kernel[dt.g[i]]));
  }
}

TEST(Equivalent, Examples) {
  const Extension z4 = z4_extension();
  auto self = equivalent(z4, z4);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->eta, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(self->c, (std::vector<int>{0, 0}));
  EXPECT_FALSE(equivalent(z4, dual_extension()).has_value());
  EXPECT_THROW(equivalent(z4, z4, 1), GuardError);
}

TEST(Equivalent, CohomologousFactorSystemsGiveCorrectionT) {
  const ESystem base = ex4();
  const FactorSystem a = z2_factor_system(1, 0);
  // a + d1(t) with t(1) = 1 over the identity action: g(1,1) gains 1.
  const FactorSystem b = z2_factor_system(1, 1);
  const std::vector<int> x{0, 1};
  const Extension ea = crossed_product_extension(base, a, x);
  const Extension eb = crossed_product_extension(base, b, x);
  auto eq = equivalent(ea, eb);
  ASSERT_TRUE(eq.has_value());
  EXPECT_EQ(eq->c, (std::vector<int>{0, 1}));
  EXPECT_EQ(induced_psi(ea), induced_psi(eb));
}

TEST(Obstruction, VanishingExamples) {
  EXPECT_TRUE(extension_obstruction(ex4(), zmod(2), {0, 1}).vanishes());
  EXPECT_TRUE(extension_obstruction(corpus_entry("ex3-2z4"), zmod(2), {0, 1}).vanishes());
  EXPECT_NO_THROW(extension_obstruction(twob_esystem(), zmod(2), {0, 1}));
  EXPECT_THROW(extension_obstruction(corpus_entry("ex5-zm2"), zmod(2), {0, 1}), AxiomError);
}

TEST(Enumerate, Example4HasTwoClasses) {
  ExtensionClasses ec = enumerate_extensions(ex4(), zmod(2), {0, 1});
  EXPECT_EQ(ec.h2_order, 2);
  ASSERT_EQ(ec.classes.size(), 2u);
  std::multiset<int> orders;
  for (const Extension& e : ec.classes) orders.insert(max_additive_order(*e.E));
  EXPECT_EQ(orders, (std::multiset<int>{2, 4}));
  for (const Extension& e : ec.classes) EXPECT_EQ(induced_psi(e).map, (std::vector<int>{0, 1}));
}

TEST(Enumerate, Example3HasOneClass) {
  ExtensionClasses ec = enumerate_extensions(corpus_entry("ex3-2z4"), zmod(2), {0, 1});
  EXPECT_EQ(ec.classes.size(), 1u);
}

TEST(Enumerate, FactorSystemsRoundTrip) {
  for (const std::string name : {"ex4-z2", "twob", "ex4-z2-over-z4", "ex3-z2x0"}) {
    const ESystem base = corpus_entry(name);
    const RingPtr coker = induced_kernel_module(base).coker.ring;
    for (const RingPtr& q : {zmod(2), zmod(4), product(zmod(2), zmod(2))}) {
      if (base.B->order() * q->order() > 16) continue;
      for (const auto& psi : unital_homs(*q, *coker)) {
        ExtensionClasses ec = enumerate_extensions(base, q, psi);
        ASSERT_TRUE(ec.obstruction.vanishes()) << name;
        EXPECT_EQ(ec.classes.size(), static_cast<std::size_t>(ec.h2_order));
        for (const Extension& e : ec.classes) {
          EXPECT_EQ(induced_psi(e).map, psi);
          const std::vector<int> lifts = least_lifts(e);
          const Extension back =
              crossed_product_extension(base, factor_system_from_extension(e, lifts), eps_of_lifts(e, lifts));
          EXPECT_TRUE(equivalent(back, e).has_value()) << name;
        }
      }
    }
  }
}

TEST(RawSearch, AgreesWithEnumerationOnSmallCases) {
  for (const std::string name : {"ex4-z2", "ex3-2z4", "twob"}) {
    const ESystem base = corpus_entry(name);
    RawSearch rs = raw_extension_search(base, zmod(2), {0, 1});
    ExtensionClasses ec = enumerate_extensions(base, zmod(2), {0, 1});
    EXPECT_EQ(rs.first.has_value(), !ec.classes.empty()) << name;
    if (rs.first) EXPECT_EQ(induced_psi(*rs.first).map, (std::vector<int>{0, 1}));
  }
  RawSearch all = raw_extension_search(ex4(), zmod(2), {0, 1}, false);
  EXPECT_EQ(all.candidates, 4);
  EXPECT_EQ(all.valid, 4);
}

TEST(UnitalHoms, Examples) {
  EXPECT_EQ(unital_homs(*zmod(4), *zmod(2)).size(), 1u);
  EXPECT_EQ(unital_homs(*zmod(2), *zmod(4)).size(), 0u);
  EXPECT_EQ(unital_homs(*product(zmod(2), zmod(2)), *zmod(2)).size(), 2u);
}

TEST(FactorSystem, ChangeLiftsMatchesOtherLift) {
  const Extension ext = z4_extension();
  const FactorSystem a = factor_system_from_extension(ext, {0, 1});
  const FactorSystem b = factor_system_from_extension(ext, {0, 3});  // 3 = 1 + j(1)
  const FactorSystem moved = change_lifts(a, {0, 1});
  EXPECT_EQ(moved.phi, b.phi);
  EXPECT_EQ(moved.f, b.f);
  EXPECT_EQ(moved.g, b.g);
}

TEST(Enumerate, TrivialCokernelLiftsTheUnit) {
  // Coker d = 0, so the section sends the unit class to 0.
  ExtensionClasses ec = enumerate_extensions(corpus_entry("ex3-z2"), zmod(2), {0, 0});
  ASSERT_EQ(ec.classes.size(), 1u);
  EXPECT_EQ(ec.factor_systems[0].phi[1], identity_bimult(*ec.factor_systems[0].B));
  EXPECT_TRUE(find_isomorphism(*ec.classes[0].E, *product(zmod(2), zmod(2))).has_value());
}
