// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --only 3   run one criterion

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "annring/ablin.hpp"
#include "annring/anncat.hpp"
#include "annring/bimult.hpp"
#include "annring/cohomology.hpp"
#include "annring/corpus.hpp"
#include "annring/crossed.hpp"
#include "annring/error.hpp"
#include "annring/extensions.hpp"

using namespace annring;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Verdict {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) notes_.push_back(what);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome done(const std::string& summary) const {
    Outcome o{failures_ == 0, summary};
    if (failures_) {
      o.detail += "; " + std::to_string(failures_) + " failure(s):";
      for (const auto& n : notes_) o.detail += " [" + n + "]";
    }
    return o;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
};

std::string str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::vector<ESystem> regular_corpus() {
  std::vector<ESystem> out;
  for (ESystem& es : corpus())
    if (is_regular(es)) out.push_back(std::move(es));
  return out;
}

// Rings on F2^k: elements are bit masks, addition is XOR.
RingPtr f2_algebra(const std::string& name, int k, const std::function<int(int, int)>& mul) {
  const int n = 1 << k;
  RingTables t{name, n, std::vector<int>(n * n), std::vector<int>(n * n), std::nullopt};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.add[a * n + b] = a ^ b;
      t.mul[a * n + b] = mul(a, b);
    }
  t.unit = find_unit(t);
  return make_ring(std::move(t));
}

int bit(int x, int i) { return (x >> i) & 1; }

// Unital rings of order at most 8 used as quotients.
std::vector<RingPtr> quotient_rings() {
  std::vector<RingPtr> q{zmod(2), zmod(3), zmod(4), product(zmod(2), zmod(2)), dual_numbers_z2()};
  // a + b w with w^2 = w + 1
  q.push_back(f2_algebra("F4", 2, [](int x, int y) {
    const int a = bit(x, 0), b = bit(x, 1), c = bit(y, 0), d = bit(y, 1);
    return ((a & c) ^ (b & d)) | (((a & d) ^ (b & c) ^ (b & d)) << 1);
  }));
  for (int n : {5, 6, 7, 8}) q.push_back(zmod(n));
  q.push_back(product(zmod(2), zmod(4)));
  q.push_back(product(zmod(2), product(zmod(2), zmod(2))));
  q.push_back(product(zmod(2), dual_numbers_z2()));
  // a + b x + c x^2 with x^3 = 0
  q.push_back(f2_algebra("Z2[x]/x^3", 3, [](int x, int y) {
    int r = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; i + j < 3; ++j) r ^= (bit(x, i) & bit(y, j)) << (i + j);
    return r;
  }));
  // upper triangular [[a, b], [0, c]] over Z/2
  q.push_back(f2_algebra("T2(Z2)", 3, [](int x, int y) {
    const int a = bit(x, 0), b = bit(x, 1), c = bit(x, 2);
    const int a2 = bit(y, 0), b2 = bit(y, 1), c2 = bit(y, 2);
    return (a & a2) | (((a & b2) ^ (b & c2)) << 1) | ((c & c2) << 2);
  }));
  return q;
}

// First (x, y, z) with (xy)z != x(yz), by exhaustive scan.
std::optional<std::array<int, 3>> associativity_failure(const RingTables& t) {
  const int n = t.order;
  auto mul = [&](int a, int b) { return t.mul[a * n + b]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool phi_permutable(const FactorSystem& fs) {
  for (const auto& s : fs.phi)
    for (const auto& t : fs.phi)
      if (!permutable(*fs.B, s, t)) return false;
  return true;
}

// 1. Category isomorphism round trip.
Outcome criterion1() {
  Verdict v;
  const std::vector<ESystem> reg = regular_corpus();
  for (const ESystem& es : reg) {
    const CrossedBimodule xb = es_to_xb(es);
    v.check(xb_to_es(xb) == es, es.name + ": xb_to_es(es_to_xb) != id");
    v.check(es_to_xb(xb_to_es(xb)) == xb, es.name + ": es_to_xb(xb_to_es) != id");
  }

  // Hom-sets between small entries: unital f0 and every f1 fixing 0.
  std::vector<const ESystem*> small;
  for (const ESystem& es : reg)
    if (es.B->order() <= 4 && es.D->order() <= 4) small.push_back(&es);
  const std::size_t k = small.size();
  std::vector<std::vector<std::vector<ESysMorphism>>> homs(k, std::vector<std::vector<ESysMorphism>>(k));
  std::size_t morphisms = 0;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      const ESystem& a = *small[s];
      const ESystem& b = *small[t];
      const int nb = a.B->order(), mb = b.B->order();
      for (const auto& f0 : unital_homs(*a.D, *b.D)) {
        std::vector<int> f1(nb, 0);
        for (;;) {
          try {
            homs[s][t].push_back(validate_morphism(a, b, {f1, f0}));
          } catch (const AxiomError&) {
          }
          int i = 1;
          while (i < nb && ++f1[i] == mb) f1[i++] = 0;
          if (i >= nb) break;
        }
      }
      morphisms += homs[s][t].size();
    }

  std::vector<CrossedBimodule> xbs;
  for (const ESystem* es : small) xbs.push_back(es_to_xb(*es));
  std::size_t compositions = 0;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      for (const ESysMorphism& f : homs[s][t]) {
        const XBMorphism xf = morphism_to_xb(*small[s], *small[t], f);
        v.check(morphism_to_es(xbs[s], xbs[t], xf) == f, small[s]->name + " -> " + small[t]->name + ": round trip");
        for (std::size_t u = 0; u < k; ++u)
          for (const ESysMorphism& g : homs[t][u]) {
            const XBMorphism xg = morphism_to_xb(*small[t], *small[u], g);
            const ESysMorphism gf = compose(g, f);
            v.check(morphism_to_xb(*small[s], *small[u], gf) == compose(xg, xf),
                    small[s]->name + " -> " + small[u]->name + ": to_xb composition");
            v.check(morphism_to_es(xbs[s], xbs[u], compose(xg, xf)) == gf,
                    small[s]->name + " -> " + small[u]->name + ": to_es composition");
            ++compositions;
          }
      }
  for (std::size_t s = 0; s < k; ++s)
    v.check(morphism_to_xb(*small[s], *small[s], identity_morphism(*small[s])) ==
                XBMorphism{identity_morphism(*small[s]).f1, identity_morphism(*small[s]).f0},
            small[s]->name + ": identity");
  return v.done(std::to_string(reg.size()) + " regular entries, " + std::to_string(morphisms) + " morphisms among " +
                std::to_string(k) + " small entries, " + std::to_string(compositions) + " composable pairs");
}

// 2. Ker d in the bicenter, Im d an ideal, well-defined Coker d action.
Outcome criterion2() {
  Verdict v;
  const std::vector<ESystem> all = corpus();
  long checks = 0;
  for (const ESystem& es : all) {
    const FiniteRing& B = *es.B;
    const FiniteRing& D = *es.D;
    std::vector<int> ker, im;
    std::vector<bool> in_ker(B.order(), false), in_im(D.order(), false);
    for (int b = 0; b < B.order(); ++b)
      if (es.d[b] == 0) {
        ker.push_back(b);
        in_ker[b] = true;
      }
    for (int b = 0; b < B.order(); ++b) in_im[es.d[b]] = true;
    for (int x = 0; x < D.order(); ++x)
      if (in_im[x]) im.push_back(x);

    for (int c : ker)
      for (int b = 0; b < B.order(); ++b, ++checks)
        v.check(B.mul(c, b) == 0 && B.mul(b, c) == 0, es.name + ": kernel element " + std::to_string(c) + " not in bicenter");
    for (int x : im) {
      for (int y : im) v.check(in_im[D.sub(x, y)], es.name + ": Im d not a subgroup");
      for (int r = 0; r < D.order(); ++r, ++checks)
        v.check(in_im[D.mul(r, x)] && in_im[D.mul(x, r)], es.name + ": Im d not an ideal at " + std::to_string(x));
    }
    for (int x = 0; x < D.order(); ++x)
      for (int i : im) {
        const int x2 = D.add(x, i);
        for (int a : ker) {
          ++checks;
          const int l = es.theta_left(x, a), r = es.theta_right(a, x);
          v.check(l == es.theta_left(x2, a) && r == es.theta_right(a, x2),
                  es.name + ": action depends on the representative " + std::to_string(x) + "/" + std::to_string(x2));
          v.check(in_ker[l] && in_ker[r], es.name + ": action leaves Ker d");
        }
      }
  }
  return v.done(std::to_string(all.size()) + " entries, " + std::to_string(checks) + " exact checks");
}

// 3. Strict Ann-category axioms and caught theta mutations.
Outcome criterion3() {
  Verdict v;
  const std::vector<ESystem> all = corpus();
  int passed = 0;
  for (const ESystem& es : all) {
    const CheckReport rep = anncat_axiom_check(build_anncat(es));
    if (rep.ok()) {
      ++passed;
      continue;
    }
    const Failure& f = rep.failures.front();
    v.fail(es.name + ": " + f.equation + " at " + f.witness);
  }
  // 20 single-entry mutations, spread over four entries.
  int mutations = 0, caught = 0;
  for (const std::string name : {"ex3-2z4", "ex3-z4", "twob", "ex4-z4"}) {
    const ESystem es = corpus_entry(name);
    const int nb = es.B->order();
    for (int i = 0; i < 5; ++i) {
      const int x = (1 + i) % es.D->order(), b = (i + 1) % nb, side = i % 2;
      ESystem bad = es;
      auto& tab = side == 0 ? bad.theta[x].left : bad.theta[x].right;
      tab[b] = (tab[b] + 1) % nb;
      const CheckReport rep = anncat_axiom_check(wrap_anncat(bad));
      ++mutations;
      if (!rep.ok() && !rep.failures.front().witness.empty())
        ++caught;
      else
        v.fail(name + " mutation x=" + std::to_string(x) + " b=" + std::to_string(b) + " not caught");
    }
  }
  return v.done(std::to_string(passed) + "/" + std::to_string(all.size()) + " corpus entries pass, " +
                std::to_string(caught) + "/" + std::to_string(mutations) + " mutations caught with a witness");
}

// 4. Regularity of phi iff associativity of the crossed product.
Outcome criterion4() {
  Verdict v;
  const RingPtr b = zero_mult_klein();
  const RingPtr q = product(zmod(2), zmod(2));
  std::vector<std::vector<int>> idem;
  for (const auto& m : additive_endomorphisms(*b)) {
    bool ok = true;
    for (int x = 0; x < 4; ++x) ok = ok && m[m[x]] == m[x];
    if (ok) idem.push_back(m);
  }
  auto complement = [&](const std::vector<int>& m) {
    std::vector<int> c(4);
    for (int x = 0; x < 4; ++x) c[x] = b->sub(x, m[x]);
    return c;
  };
  auto pair = [](std::vector<int> l, std::vector<int> r) { return Bimultiplication{std::move(l), std::move(r)}; };

  std::vector<FactorSystem> systems;
  for (const auto& P : idem)
    for (const auto& R : idem) {
      FactorSystem fs{b, q, {}, std::vector<int>(16, 0), std::vector<int>(16, 0)};
      fs.phi = {zero_bimult(*b), pair(complement(P), complement(R)), pair(P, R), identity_bimult(*b)};
      systems.push_back(std::move(fs));
    }
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g)
      systems.push_back({b, zmod(2), {zero_bimult(*b), identity_bimult(*b)}, {0, 0, 0, f}, {0, 0, 0, g}});

  int regular = 0, irregular = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const FactorSystem& fs = systems[i];
    const std::string tag = "system " + std::to_string(i);
    const RingTables t = crossed_product_tables(fs);
    const auto fail = associativity_failure(t);
    if (phi_permutable(fs)) {
      ++regular;
      v.check(!fail.has_value(), tag + ": regular but not associative");
      try {
        const CrossedProduct cp = crossed_product(fs);
        v.check(cp.E->order() == t.order && t.order <= 16, tag + ": wrong order");
      } catch (const AxiomError& e) {
        v.fail(tag + ": regular system rejected: " + e.what());
      }
      continue;
    }
    ++irregular;
    v.check(fail.has_value(), tag + ": non-regular but associative");
    try {
      crossed_product(fs);
      v.fail(tag + ": non-regular system accepted");
    } catch (const AxiomError& e) {
      int x, y, z;
      if (e.axiom() != "multiplicative associativity" ||
          std::sscanf(e.witness().c_str(), "(%d,%d,%d)", &x, &y, &z) != 3) {
        v.fail(tag + ": unexpected error " + std::string(e.what()));
        continue;
      }
      const int n = t.order;
      auto mul = [&](int a, int c) { return t.mul[a * n + c]; };
      v.check(mul(mul(x, y), z) != mul(x, mul(y, z)), tag + ": reported triple associates");
    }
  }
  return v.done(std::to_string(regular) + " regular systems associative, " + std::to_string(irregular) +
                " non-regular systems with a verified failing triple");
}

// 5. Two classes over ex4-z2 with Q = Z/2 and psi = id.
Outcome criterion5() {
  Verdict v;
  const ESystem base = corpus_entry("ex4-z2");
  const RingPtr q = zmod(2);
  const Bimodule m = regular_bimodule(zmod(2));  // Ker d = Z/2 with the identity action

  // Brute force over the normalized 2-cochains (f(1,1), g(1,1)) and 1-cochains t(1).
  std::set<std::pair<int, int>> cocycles, coboundaries;
  for (int f = 0; f < 2; ++f)
    for (int g = 0; g < 2; ++g) {
      Cochain2 c = Cochain2::zero(2);
      c.f[3] = f;
      c.g[3] = g;
      if (d2(m, c) == Cochain3::zero(2)) cocycles.insert({f, g});
    }
  for (int t = 0; t < 2; ++t) {
    const Cochain2 c = d1(m, Cochain1{2, {0, t}});
    coboundaries.insert({c.f[3], c.g[3]});
  }
  const std::size_t brute = cocycles.size() / coboundaries.size();
  v.check(brute == 2, "brute-force |H2| = " + std::to_string(brute));
  v.check(h2(m).order == 2, "h2 order " + std::to_string(h2(m).order));

  const ExtensionClasses ec = enumerate_extensions(base, q, {0, 1});
  v.check(ec.classes.size() == 2, "enumerate returned " + std::to_string(ec.classes.size()) + " classes");
  std::multiset<int> orders;
  for (const Extension& e : ec.classes) orders.insert(max_additive_order(*e.E));
  v.check(orders == std::multiset<int>{2, 4}, "max additive orders differ from {2, 4}");
  for (std::size_t i = 0; i < ec.classes.size(); ++i)
    for (std::size_t j = 0; j < ec.classes.size(); ++j)
      v.check(equivalent(ec.classes[i], ec.classes[j]).has_value() == (i == j),
              "equivalence of classes " + std::to_string(i) + ", " + std::to_string(j));
  return v.done("brute-force |H2| = " + std::to_string(brute) + " (" + std::to_string(cocycles.size()) + " cocycles, " +
                std::to_string(coboundaries.size()) + " coboundaries), " + std::to_string(ec.classes.size()) +
                " classes with max additive orders {2, 4}");
}

// 6. Enumeration, obstruction and raw search agree on emptiness.
Outcome criterion6() {
  Verdict v;
  const std::vector<RingPtr> qs = quotient_rings();
  int triples = 0, nonempty = 0;
  Int candidates = 0;
  for (const ESystem& es : regular_corpus()) {
    const Quotient coker = ideal_cokernel(d_hom(es));
    for (const RingPtr& q : qs) {
      if (es.B->order() * q->order() > 8) continue;
      for (const auto& psi : unital_homs(*q, *coker.ring)) {
        const std::string tag = es.name + " / " + q->name() + " / psi " + str(psi);
        ++triples;
        const ObstructionDecision ob = extension_obstruction(es, q, psi);
        const ExtensionClasses ec = enumerate_extensions(es, q, psi);
        const RawSearch rs = raw_extension_search(es, q, psi);
        candidates += rs.candidates;
        v.check(ec.classes.empty() != ob.vanishes(), tag + ": enumeration disagrees with the obstruction");
        v.check(rs.first.has_value() == ob.vanishes(), tag + ": raw search disagrees with the obstruction");
        if (rs.first) v.check(induced_psi(*rs.first).map == psi, tag + ": raw extension induces another psi");
        if (!ec.classes.empty()) ++nonempty;
      }
    }
  }
  return v.done(std::to_string(triples) + " triples over " + std::to_string(qs.size()) + " quotient rings, " +
                std::to_string(nonempty) + " with extensions, " + std::to_string(candidates) + " raw tables tried");
}

// 7. Two sections give cohomologous structures.
Outcome criterion7() {
  Verdict v;
  int instances = 0;
  for (const ESystem& es : regular_corpus()) {
    bool kernel = false;
    for (int b = 1; b < es.B->order(); ++b) kernel = kernel || es.d[b] == 0;
    if (!kernel) continue;
    ++instances;
    const Section a = choose_section(es, SectionChoice::least);
    const Section b = choose_section(es, SectionChoice::greatest);
    v.check(!(a == b), es.name + ": the two sections coincide");
    const ReducedAnnCat ka = reduce(es, a);
    const ReducedAnnCat kb = reduce(es, b);
    v.check(ka.M.left == kb.M.left && ka.M.right == kb.M.right, es.name + ": modules differ");
    const Cochain3 diff = sub(ka.M, ka.k, kb.k);
    const CoboundaryDecision dec = is_coboundary3(ka.M, diff);
    v.check(dec.coboundary && dec.witness && d2(ka.M, *dec.witness) == diff, es.name + ": k - k' not in im d2");
  }
  return v.done(std::to_string(instances) + " entries with Ker d != 0, least against greatest section");
}

// 8. d2 d1 = 0, B2 in Z2, reduced axioms on d2 images.
Outcome criterion8() {
  Verdict v;
  const std::vector<std::pair<std::string, Bimodule>> modules{
      {"Z/2", regular_bimodule(zmod(2))},
      {"Z/4", regular_bimodule(zmod(4))},
      {"Z/2 over Z/4", bimodule_via(zmod(4), zmod(2), {0, 1, 0, 1})},
  };
  int trials = 0, reduced = 0;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    const auto& [name, m] = modules[i];
    const ComplexCheck cc = check_complex(m, 1000 + i, 1000);
    trials += cc.trials;
    reduced += cc.reduced_trials;
    v.check(cc.trials == 1000, name + ": trials ran " + std::to_string(cc.trials));
    v.check(cc.d2d1_failures == 0, name + ": d2 d1 != 0 on " + std::to_string(cc.d2d1_failures));
    v.check(cc.b2_in_z2, name + ": B2 not in Z2");
    v.check(cc.reduced_trials > 0, name + ": no reduced trials");
    if (cc.first_reduced_failure)
      v.fail(name + ": " + cc.first_reduced_failure->equation + " at " + cc.first_reduced_failure->witness);
  }
  return v.done(std::to_string(trials) + " seeded 1-cochains over 3 modules, " + std::to_string(reduced) +
                " unit-normalized d2 images through the reduced axioms");
}

// 9. Smith form oracle and solve against exhaustive search.
Outcome criterion9() {
  using namespace ablin;
  Verdict v;
  const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const SmithForm sf = smith_normal_form(a);
  v.check(sf.S == IntMatrix::from_rows({{2, 0}, {0, 4}}), "S != diag(2, 4)");
  v.check(sf.U * a * sf.V == sf.S, "U A V != S");
  v.check(std::abs(determinant(sf.U)) == 1 && std::abs(determinant(sf.V)) == 1, "U or V not unimodular");

  std::mt19937_64 rng(20261014);
  auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  auto random_group = [&](Int max_order) {
    Vec moduli;
    Int order = 1;
    const int rank = static_cast<int>(pick(1, 3));
    for (int i = 0; i < rank; ++i) {
      const Int m = pick(2, 12);
      if (order * m > max_order) break;
      moduli.push_back(m);
      order *= m;
    }
    if (moduli.empty()) moduli.push_back(pick(2, 8));
    return FinAbGroup(moduli);
  };
  int solvable = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FinAbGroup src = random_group(256), tgt = random_group(256);
    IntMatrix mat(tgt.rank(), src.rank());
    for (std::size_t r = 0; r < tgt.rank(); ++r)
      for (std::size_t c = 0; c < src.rank(); ++c) {
        // m_c * entry = 0 mod t_r
        const Int t = tgt.moduli()[r], step = t / arith::gcd(t, src.moduli()[c]);
        mat(r, c) = step * pick(0, t / step - 1);
      }
    const LinearMap map(src, tgt, mat);
    // Half the targets are images, so both answers occur.
    Vec b(tgt.rank());
    if (trial % 2 == 0) {
      b = map.apply(src.element(pick(0, src.order() - 1)));
    } else {
      for (std::size_t r = 0; r < tgt.rank(); ++r) b[r] = pick(0, tgt.moduli()[r] - 1);
    }
    bool exhaustive = false;
    for (Int i = 0; i < src.order() && !exhaustive; ++i) exhaustive = map.apply(src.element(i)) == b;
    const auto x = solve(map, b);
    v.check(x.has_value() == exhaustive, "trial " + std::to_string(trial) + ": solvability disagrees");
    if (x) {
      ++solvable;
      v.check(src.contains(*x) && map.apply(*x) == b, "trial " + std::to_string(trial) + ": wrong solution");
    }
  }
  return v.done("SNF diag" + str({static_cast<int>(sf.S(0, 0)), static_cast<int>(sf.S(1, 1))}) +
                " verified; 100 random systems, " + std::to_string(solvable) + " solvable");
}

// 10. anncat_to_esystem inverts build_anncat.
Outcome criterion10() {
  Verdict v;
  const std::vector<ESystem> all = corpus();
  for (const ESystem& es : all) v.check(anncat_to_esystem(build_anncat(es)) == es, es.name);
  return v.done(std::to_string(all.size()) + " entries");
}

struct Criterion {
  int id;
  const char* title;
  double budget;  // seconds, 0 for none
  Outcome (*run)();
};

const std::vector<Criterion> kCriteria{
    {1, "category isomorphism round trip", 10, criterion1},
    {2, "kernel, image and action structure", 0, criterion2},
    {3, "strict Ann-category coherence", 0, criterion3},
    {4, "regularity iff associativity", 0, criterion4},
    {5, "extensions of Z/2 by Z/2", 5, criterion5},
    {6, "obstruction soundness", 300, criterion6},
    {7, "section independence", 0, criterion7},
    {8, "cochain complex", 30, criterion8},
    {9, "exact linear algebra", 0, criterion9},
    {10, "Ann-category round trip", 0, criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && secs > c.budget) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.title << " (" << timing
              << "): " << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
