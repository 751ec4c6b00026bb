#include "annring/cohomology.hpp"

#include <random>
#include <string>

#include "annring/error.hpp"
#include "coboundary.hpp"

namespace annring {

using detail::ModuleOps;

Cochain2 d1(const Bimodule& m, const Cochain1& t) { return detail::d1_generic(*m.ring, ModuleOps{m}, t); }
Cochain3 d2(const Bimodule& m, const Cochain2& c) { return detail::d2_generic(*m.ring, ModuleOps{m}, c); }

namespace {

template <class F>
std::vector<int> zip(const std::vector<int>& a, const std::vector<int>& b, F op) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

template <class F>
Cochain3 zip3(const Cochain3& a, const Cochain3& b, F op) {
  return {a.n, zip(a.xi, b.xi, op), zip(a.eta, b.eta, op), zip(a.alpha, b.alpha, op), zip(a.lambda, b.lambda, op),
          zip(a.rho, b.rho, op)};
}

void check_values(const Bimodule& m, const std::vector<int>& tab, std::size_t size, const char* name) {
  if (tab.size() != size) throw AxiomError(std::string(name) + " table size", std::to_string(tab.size()));
  for (std::size_t i = 0; i < tab.size(); ++i)
    if (tab[i] < 0 || tab[i] >= m.module.order())
      throw AxiomError(std::string(name) + " values in M", std::to_string(i));
}

// Every slot of an n^arity table with a zero argument must hold 0.
void check_zero_slots(const std::vector<int>& tab, int n, int arity, const char* name) {
  for (std::size_t i = 0; i < tab.size(); ++i) {
    bool zero_arg = false;
    std::size_t rest = i;
    std::vector<int> args(arity);
    for (int a = arity - 1; a >= 0; --a) {
      args[a] = static_cast<int>(rest % n);
      rest /= n;
      zero_arg = zero_arg || args[a] == 0;
    }
    if (zero_arg && tab[i] != 0) {
      std::string w = "(";
      for (int a = 0; a < arity; ++a) w += (a ? "," : "") + std::to_string(args[a]);
      throw AxiomError(std::string(name) + " normalized at 0", w + ")");
    }
  }
}

Int checked_coords(std::size_t slots, std::size_t rank, Int guard) {
  const Int c = static_cast<Int>(slots * rank);
  if (c > guard) throw GuardError("cochain group needs " + std::to_string(c) + " coordinates (guard " + std::to_string(guard) + ")");
  return c;
}

ablin::FinAbGroup repeated(const ablin::FinAbGroup& g, std::size_t times) {
  Vec mod;
  for (std::size_t i = 0; i < times; ++i) mod.insert(mod.end(), g.moduli().begin(), g.moduli().end());
  return ablin::FinAbGroup(mod);
}

}  // namespace

Cochain2 add(const Bimodule& m, const Cochain2& a, const Cochain2& b) {
  auto op = [&](int x, int y) { return m.module.add(x, y); };
  return {a.n, zip(a.f, b.f, op), zip(a.g, b.g, op)};
}

Cochain2 neg(const Bimodule& m, const Cochain2& a) {
  Cochain2 out = a;
  for (int& x : out.f) x = m.module.neg(x);
  for (int& x : out.g) x = m.module.neg(x);
  return out;
}

Cochain3 add(const Bimodule& m, const Cochain3& a, const Cochain3& b) {
  return zip3(a, b, [&](int x, int y) { return m.module.add(x, y); });
}
Cochain3 sub(const Bimodule& m, const Cochain3& a, const Cochain3& b) {
  return zip3(a, b, [&](int x, int y) { return m.module.sub(x, y); });
}
Cochain3 neg(const Bimodule& m, const Cochain3& a) { return sub(m, Cochain3::zero(a.n), a); }

void check_normalized(const Bimodule& m, const Cochain1& t) {
  const int n = m.ring->order();
  check_values(m, t.t, n, "t");
  if (t.t[0] != 0) throw AxiomError("t normalized at 0", "(0)");
}

void check_normalized(const Bimodule& m, const Cochain2& c) {
  const int n = m.ring->order();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  check_values(m, c.f, n2, "f");
  check_values(m, c.g, n2, "g");
  check_zero_slots(c.f, n, 2, "f");
  check_zero_slots(c.g, n, 2, "g");
}

void check_normalized(const Bimodule& m, const Cochain3& k) {
  const int n = m.ring->order();
  const std::size_t n2 = static_cast<std::size_t>(n) * n, n3 = n2 * n;
  check_values(m, k.xi, n3, "xi");
  check_values(m, k.eta, n2, "eta");
  check_values(m, k.alpha, n3, "alpha");
  check_values(m, k.lambda, n3, "lambda");
  check_values(m, k.rho, n3, "rho");
  check_zero_slots(k.xi, n, 3, "xi");
  check_zero_slots(k.eta, n, 2, "eta");
  check_zero_slots(k.alpha, n, 3, "alpha");
  check_zero_slots(k.lambda, n, 3, "lambda");
  check_zero_slots(k.rho, n, 3, "rho");
}

CochainComplex::CochainComplex(Bimodule m, bool unit_normalized, Int guard)
    : m_(std::move(m)),
      unit_normalized_(unit_normalized),
      d1_(ablin::FinAbGroup{}, ablin::FinAbGroup{}, ablin::IntMatrix{}),
      d2_(ablin::FinAbGroup{}, ablin::FinAbGroup{}, ablin::IntMatrix{}) {
  const FiniteRing& r = *m_.ring;
  const int n = r.order();
  int one = -1;
  if (unit_normalized_) {
    if (!r.unit()) throw Error("unit-normalized cochains need a unital ring");
    one = *r.unit();
  }
  for (int u = 1; u < n; ++u)
    if (u != one) slots1_.push_back(u);
  for (int g = 0; g < 2; ++g)
    for (int u = 1; u < n; ++u)
      for (int v = 1; v < n; ++v)
        if (!g || (u != one && v != one)) slots2_.push_back({g == 1, u, v});

  const ablin::FinAbGroup& mg = m_.module.group();
  const std::size_t rank = mg.rank();
  const std::size_t nz = static_cast<std::size_t>(n - 1);
  checked_coords(slots2_.size(), rank, guard);
  checked_coords(4 * nz * nz * nz + nz * nz, rank, guard);

  const ablin::FinAbGroup g1 = repeated(mg, slots1_.size());
  const ablin::FinAbGroup g2 = repeated(mg, slots2_.size());
  const ablin::FinAbGroup g3 = repeated(mg, 4 * nz * nz * nz + nz * nz);

  // Column j of each matrix is the image of the j-th coordinate generator.
  auto unit_vec = [&](std::size_t dim, std::size_t j) {
    Vec e(dim, 0);
    e[j] = 1;
    return e;
  };
  ablin::IntMatrix a1(g2.rank(), g1.rank());
  for (std::size_t j = 0; j < g1.rank(); ++j) {
    const Vec col = encode(d1(m_, decode1(unit_vec(g1.rank(), j))));
    for (std::size_t i = 0; i < col.size(); ++i) a1(i, j) = col[i];
  }
  ablin::IntMatrix a2(g3.rank(), g2.rank());
  for (std::size_t j = 0; j < g2.rank(); ++j) {
    const Vec col = encode(d2(m_, decode2(unit_vec(g2.rank(), j))));
    for (std::size_t i = 0; i < col.size(); ++i) a2(i, j) = col[i];
  }
  d1_ = ablin::LinearMap(g1, g2, std::move(a1));
  d2_ = ablin::LinearMap(g2, g3, std::move(a2));
}

Vec CochainComplex::encode(const Cochain1& t) const {
  Vec out;
  for (int u : slots1_) {
    const Vec& c = m_.module.coords(t.t[u]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Vec CochainComplex::encode(const Cochain2& c) const {
  Vec out;
  for (const Slot2& s : slots2_) {
    const Vec& x = m_.module.coords(s.g ? c.at_g(s.u, s.v) : c.at_f(s.u, s.v));
    out.insert(out.end(), x.begin(), x.end());
  }
  return out;
}

Vec CochainComplex::encode(const Cochain3& k) const {
  const int n = ring().order();
  Vec out;
  auto put = [&](int e) {
    const Vec& x = m_.module.coords(e);
    out.insert(out.end(), x.begin(), x.end());
  };
  for (const auto* tab : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho}) {
    const bool binary = tab == &k.eta;
    for (int u = 1; u < n; ++u)
      for (int v = 1; v < n; ++v) {
        if (binary) {
          put((*tab)[u * n + v]);
          continue;
        }
        for (int w = 1; w < n; ++w) put((*tab)[k.idx3(u, v, w)]);
      }
  }
  return out;
}

Cochain1 CochainComplex::decode1(std::span<const Int> x) const {
  const std::size_t r = m_.module.group().rank();
  Cochain1 t = Cochain1::zero(ring().order());
  for (std::size_t i = 0; i < slots1_.size(); ++i) t.t[slots1_[i]] = m_.module.element(x.subspan(i * r, r));
  return t;
}

Cochain2 CochainComplex::decode2(std::span<const Int> x) const {
  const std::size_t r = m_.module.group().rank();
  const int n = ring().order();
  Cochain2 c = Cochain2::zero(n);
  for (std::size_t i = 0; i < slots2_.size(); ++i) {
    const Slot2& s = slots2_[i];
    (s.g ? c.g : c.f)[s.u * n + s.v] = m_.module.element(x.subspan(i * r, r));
  }
  return c;
}

Cochain3 CochainComplex::decode3(std::span<const Int> x) const {
  const std::size_t r = m_.module.group().rank();
  const int n = ring().order();
  Cochain3 k = Cochain3::zero(n);
  std::size_t pos = 0;
  auto take = [&] {
    const int e = m_.module.element(x.subspan(pos, r));
    pos += r;
    return e;
  };
  for (auto* tab : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho}) {
    const bool binary = tab == &k.eta;
    for (int u = 1; u < n; ++u)
      for (int v = 1; v < n; ++v) {
        if (binary) {
          (*tab)[u * n + v] = take();
          continue;
        }
        for (int w = 1; w < n; ++w) (*tab)[k.idx3(u, v, w)] = take();
      }
  }
  return k;
}

namespace {

std::vector<Vec> image_generators(const ablin::LinearMap& a) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < a.source().rank(); ++j) {
    Vec e(a.source().rank(), 0);
    e[j] = 1;
    out.push_back(a.apply(e));
  }
  return out;
}

struct Groups {
  ablin::Presentation z;
  Int b_order;
  ablin::Subquotient h;
};

Groups compute(const CochainComplex& cx) {
  ablin::Presentation z = ablin::kernel(cx.d2_map());
  const std::vector<Vec> b = image_generators(cx.d1_map());
  ablin::Subquotient h(cx.c2(), z.generators, b);
  return {std::move(z), ablin::image_order(cx.d1_map()), std::move(h)};
}

}  // namespace

CochainSubgroup z2(const CochainComplex& cx) {
  ablin::Presentation z = ablin::kernel(cx.d2_map());
  CochainSubgroup out{z.group.order(), z.group.moduli(), {}};
  for (const Vec& g : z.generators) out.generators.push_back(cx.decode2(g));
  return out;
}

CochainSubgroup b2(const CochainComplex& cx) {
  const std::vector<Vec> gens = image_generators(cx.d1_map());
  ablin::Subquotient s(cx.c2(), gens, {});
  CochainSubgroup out{s.order(), s.group().moduli(), {}};
  for (const Vec& g : s.generators()) out.generators.push_back(cx.decode2(g));
  return out;
}

H2Result h2(const Bimodule& m, Int guard) {
  const CochainComplex cx(m, false, guard);
  const Groups g = compute(cx);
  H2Result out;
  out.z_order = g.z.group.order();
  out.b_order = g.b_order;
  out.order = g.h.order();
  out.invariant_factors = g.h.group().moduli();
  for (const Vec& x : g.h.generators()) out.generators.push_back(cx.decode2(x));
  if (out.order > guard) throw GuardError("H2 has " + std::to_string(out.order) + " classes (guard " + std::to_string(guard) + ")");
  for (Int i = 0; i < out.order; ++i) out.representatives.push_back(cx.decode2(g.h.representative(g.h.group().element(i))));

  if (m.ring->unit()) {
    const CochainComplex ux(m, true, guard);
    const Groups ug = compute(ux);
    out.unit_order = ug.h.order();
    out.unit_invariant_factors = ug.h.group().moduli();
  } else {
    out.unit_order = out.order;
    out.unit_invariant_factors = out.invariant_factors;
  }
  return out;
}

Bimodule pullback_bimodule(const RingHom& psi, const Bimodule& m) {
  if (!(*psi.target == *m.ring)) throw Error("pullback: psi does not land in the ring of M");
  const int nq = psi.source->order(), nm = m.module.order();
  std::vector<int> left(static_cast<std::size_t>(nq) * nm), right(static_cast<std::size_t>(nm) * nq);
  for (int u = 0; u < nq; ++u)
    for (int x = 0; x < nm; ++x) {
      left[u * nm + x] = m.act_left(psi(u), x);
      right[x * nq + u] = m.act_right(x, psi(u));
    }
  return validate_bimodule(psi.source, m.module, std::move(left), std::move(right));
}

Cochain2 pullback2(const RingHom& psi, const Cochain2& c) {
  const int nq = psi.source->order();
  Cochain2 out = Cochain2::zero(nq);
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      out.f[u * nq + v] = c.at_f(psi(u), psi(v));
      out.g[u * nq + v] = c.at_g(psi(u), psi(v));
    }
  return out;
}

Cochain3 pullback3(const RingHom& psi, const Cochain3& k) {
  const int nq = psi.source->order();
  Cochain3 out = Cochain3::zero(nq);
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      out.eta[u * nq + v] = k.eta_at(psi(u), psi(v));
      for (int w = 0; w < nq; ++w) {
        const int i = out.idx3(u, v, w);
        out.xi[i] = k.xi_at(psi(u), psi(v), psi(w));
        out.alpha[i] = k.alpha_at(psi(u), psi(v), psi(w));
        out.lambda[i] = k.lambda_at(psi(u), psi(v), psi(w));
        out.rho[i] = k.rho_at(psi(u), psi(v), psi(w));
      }
    }
  return out;
}

CoboundaryDecision is_coboundary3(const Bimodule& m, const Cochain3& k, Int guard) {
  check_normalized(m, k);
  const CochainComplex cx(m, false, guard);
  const Vec b = cx.encode(k);
  CoboundaryDecision out;
  if (auto sol = ablin::solve(cx.d2_map(), b)) {
    out.coboundary = true;
    out.witness = cx.decode2(*sol);
    return out;
  }
  const ablin::Cokernel cok = ablin::cokernel(cx.d2_map());
  out.certificate = cok.project(b);
  out.cokernel_factors = cok.group.moduli();
  return out;
}

FunctorClassification classify_functors(const RingHom& psi, const ReducedAnnCat& rc, Int guard) {
  validate_hom(psi.source, psi.target, psi.map, true);
  const Bimodule mq = pullback_bimodule(psi, rc.M);
  FunctorClassification out;
  out.obstruction = pullback3(psi, rc.k);
  out.decision = is_coboundary3(mq, out.obstruction, guard);
  if (!out.decision.coboundary) return out;
  const Cochain2 g0 = neg(mq, *out.decision.witness);
  const H2Result h = h2(mq, guard);
  out.h2_order = h.order;
  for (const Cochain2& z : h.representatives) out.representatives.push_back(add(mq, g0, z));
  return out;
}

ComplexCheck check_complex(const Bimodule& m, std::uint64_t seed, int trials, Int guard) {
  const int n = m.ring->order();
  const int one = m.ring->unit().value_or(-1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> val(0, m.module.order() - 1);
  ComplexCheck out;
  out.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Cochain1 t = Cochain1::zero(n);
    for (int u = 1; u < n; ++u) t.t[u] = val(rng);
    if (d2(m, d1(m, t)) != Cochain3::zero(n)) ++out.d2d1_failures;
  }
  const CochainComplex cx(m, false, guard);
  for (const Cochain2& b : b2(cx).generators)
    if (d2(m, b) != Cochain3::zero(n)) out.b2_in_z2 = false;
  if (one < 0) return out;
  out.reduced_trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    Cochain2 c = Cochain2::zero(n);
    for (int u = 1; u < n; ++u)
      for (int v = 1; v < n; ++v) {
        c.f[u * n + v] = val(rng);
        if (u != one && v != one) c.g[u * n + v] = val(rng);
      }
    const CheckReport rep = reduced_axiom_check({m, d2(m, c)});
    if (!rep.ok()) {
      ++out.reduced_failures;
      if (!out.first_reduced_failure) out.first_reduced_failure = rep.failures.front();
    }
  }
  return out;
}

}  // namespace annring
