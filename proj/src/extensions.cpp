#include "annring/extensions.hpp"

#include <functional>

#include "annring/error.hpp"
#include "witness.hpp"

namespace annring {

using detail::tuple_str;

namespace {

template <class F>
auto prefixed(const std::string& prefix, F&& fn) {
  try {
    return fn();
  } catch (const AxiomError& e) {
    throw AxiomError(prefix + e.axiom(), e.witness());
  }
}

std::vector<int> inverse_map(const std::vector<int>& j, int target_order) {
  std::vector<int> inv(target_order, -1);
  for (int b = 0; b < static_cast<int>(j.size()); ++b) inv[j[b]] = b;
  return inv;
}

// Records the first witness of each failing equation.
struct Report {
  CheckReport rep;
  void run(const std::string& name, const std::function<std::optional<std::string>()>& fn) {
    if (auto w = fn()) rep.failures.push_back({name, *w});
  }
};

}  // namespace

ESystem extension_esystem(const Extension& ext) {
  const FiniteRing& B = *ext.base.B;
  const FiniteRing& E = *ext.E;
  const std::vector<int> jinv = inverse_map(ext.j, E.order());
  ESystem es{"ext-" + E.name(), ext.base.B, ext.E, ext.j, {}};
  for (int e = 0; e < E.order(); ++e) {
    Bimultiplication t{std::vector<int>(B.order()), std::vector<int>(B.order())};
    for (int b = 0; b < B.order(); ++b) {
      t.left[b] = jinv[E.mul(e, ext.j[b])];
      t.right[b] = jinv[E.mul(ext.j[b], e)];
      if (t.left[b] < 0 || t.right[b] < 0) throw AxiomError("j(B) is an ideal of E", tuple_str(e, b));
    }
    es.theta.push_back(std::move(t));
  }
  return es;
}

Extension validate_extension(const ESystem& base, RingPtr E, RingPtr Q, std::vector<int> j, std::vector<int> p,
                             std::vector<int> eps) {
  const int nb = base.B->order(), ne = E->order(), nq = Q->order();
  if (static_cast<int>(j.size()) != nb || static_cast<int>(p.size()) != ne || static_cast<int>(eps.size()) != ne)
    throw AxiomError("map sizes", tuple_str(j.size(), p.size(), eps.size()));
  if (!E->unit()) throw AxiomError("E has a unit", E->name());
  prefixed("j: ", [&] { return validate_hom(base.B, E, j, false); });
  const std::vector<int> jinv = inverse_map(j, ne);
  for (int b = 0; b < nb; ++b)
    if (jinv[j[b]] != b) throw AxiomError("j injective", tuple_str(jinv[j[b]], b));
  prefixed("p: ", [&] { return validate_hom(E, Q, p, true); });
  std::vector<bool> hit(nq, false);
  for (int e = 0; e < ne; ++e) hit[p[e]] = true;
  for (int u = 0; u < nq; ++u)
    if (!hit[u]) throw AxiomError("p surjective", tuple_str(u));
  prefixed("eps: ", [&] { return validate_hom(E, base.D, eps, true); });
  for (int e = 0; e < ne; ++e)
    if ((p[e] == 0) != (jinv[e] >= 0)) throw AxiomError("Ker p = Im j", tuple_str(e));

  Extension ext{base, std::move(E), std::move(Q), std::move(j), std::move(p), std::move(eps)};
  const ESystem es = prefixed("E-system (B, E, j, theta'): ", [&] { return validate_esystem(extension_esystem(ext)); });
  std::vector<int> id(nb);
  for (int b = 0; b < nb; ++b) id[b] = b;
  prefixed("(id, eps) morphism: ", [&] { return validate_morphism(es, base, {id, ext.eps}); });
  return ext;
}

RingHom induced_psi(const Extension& ext) {
  const Quotient coker = ideal_cokernel(d_hom(ext.base));
  std::vector<int> map(ext.Q->order(), -1);
  for (int e = 0; e < ext.E->order(); ++e) {
    const int s = coker.project[ext.eps[e]];
    int& m = map[ext.p[e]];
    if (m >= 0 && m != s) throw AxiomError("psi well defined", tuple_str(e));
    m = s;
  }
  return validate_hom(ext.Q, coker.ring, std::move(map), true);
}

CheckReport check_factor_system(const FactorSystem& fs) {
  const FiniteRing& B = *fs.B;
  const FiniteRing& Q = *fs.Q;
  const int nb = B.order(), nq = Q.order();
  Report r;
  auto shapes = [&]() -> std::optional<std::string> {
    if (static_cast<int>(fs.phi.size()) != nq) return "phi has " + std::to_string(fs.phi.size()) + " entries";
    for (const auto& s : fs.phi)
      if (static_cast<int>(s.left.size()) != nb || static_cast<int>(s.right.size()) != nb) return "phi entry size";
    if (fs.f.size() != static_cast<std::size_t>(nq) * nq || fs.g.size() != fs.f.size()) return "f, g sizes";
    for (const auto* tab : {&fs.f, &fs.g})
      for (int x : *tab)
        if (x < 0 || x >= nb) return "value " + std::to_string(x);
    for (const auto& s : fs.phi)
      for (const auto* tab : {&s.left, &s.right})
        for (int x : *tab)
          if (x < 0 || x >= nb) return "phi value " + std::to_string(x);
    return std::nullopt;
  };
  r.run("factor system shapes", shapes);
  if (!r.rep.ok()) return r.rep;

  auto f = [&](int u, int v) { return fs.f[u * nq + v]; };
  auto g = [&](int u, int v) { return fs.g[u * nq + v]; };
  auto L = [&](int u, int b) { return fs.phi[u].left[b]; };
  auto R = [&](int b, int u) { return fs.phi[u].right[b]; };

  r.run("phi(u) is a bimultiplication", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u) {
      try {
        check_bimultiplication(B, fs.phi[u]);
      } catch (const AxiomError& e) {
        return "u=" + std::to_string(u) + " " + e.axiom() + " " + e.witness();
      }
    }
    return std::nullopt;
  });
  r.run("normalized at 0", [&]() -> std::optional<std::string> {
    if (fs.phi[0] != zero_bimult(B)) return tuple_str(0);
    for (int u = 0; u < nq; ++u)
      if (f(u, 0) || f(0, u) || g(u, 0) || g(0, u)) return tuple_str(u);
    return std::nullopt;
  });
  r.run("f cocycle", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int t = 0; t < nq; ++t)
          if (B.add(f(u, Q.add(v, t)), f(v, t)) != B.add(f(u, v), f(Q.add(u, v), t))) return tuple_str(u, v, t);
    return std::nullopt;
  });
  r.run("f symmetric", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        if (f(u, v) != f(v, u)) return tuple_str(u, v);
    return std::nullopt;
  });
  r.run("g associativity condition", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int t = 0; t < nq; ++t)
          if (B.add(L(u, g(v, t)), g(u, Q.mul(v, t))) != B.add(g(Q.mul(u, v), t), R(g(u, v), t)))
            return tuple_str(u, v, t);
    return std::nullopt;
  });
  r.run("left mixed condition", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int t = 0; t < nq; ++t)
          if (B.add(g(u, Q.add(v, t)), L(u, f(v, t))) !=
              B.add(B.add(g(u, v), g(u, t)), f(Q.mul(u, v), Q.mul(u, t))))
            return tuple_str(u, v, t);
    return std::nullopt;
  });
  r.run("right mixed condition", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int t = 0; t < nq; ++t)
          if (B.add(g(Q.add(u, v), t), R(f(u, v), t)) !=
              B.add(B.add(g(u, t), g(v, t)), f(Q.mul(u, t), Q.mul(v, t))))
            return tuple_str(u, v, t);
    return std::nullopt;
  });
  r.run("phi additive up to f", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int b = 0; b < nb; ++b) {
          const int w = Q.add(u, v);
          if (B.add(L(u, b), L(v, b)) != B.add(B.mul(f(u, v), b), L(w, b)) ||
              B.add(R(b, u), R(b, v)) != B.add(B.mul(b, f(u, v)), R(b, w)))
            return tuple_str(u, v, b);
        }
    return std::nullopt;
  });
  r.run("phi multiplicative up to g", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int b = 0; b < nb; ++b) {
          const int w = Q.mul(u, v);
          if (L(u, L(v, b)) != B.add(B.mul(g(u, v), b), L(w, b)) ||
              R(R(b, u), v) != B.add(B.mul(b, g(u, v)), R(b, w)))
            return tuple_str(u, v, b);
        }
    return std::nullopt;
  });
  r.run("phi(1) is the identity", [&]() -> std::optional<std::string> {
    if (!Q.unit()) return std::string("Q has no unit");
    if (fs.phi[*Q.unit()] != identity_bimult(B)) return tuple_str(*Q.unit());
    return std::nullopt;
  });
  r.run("phi pairwise permutable", [&]() -> std::optional<std::string> {
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        if (auto a = permutability_witness(B, fs.phi[u], fs.phi[v])) return tuple_str(u, v, *a);
    return std::nullopt;
  });
  return r.rep;
}

RingTables crossed_product_tables(const FactorSystem& fs) {
  const FiniteRing& B = *fs.B;
  const FiniteRing& Q = *fs.Q;
  const int nb = B.order(), nq = Q.order(), n = nb * nq;
  if (n > kMaxRingOrder) throw GuardError("crossed product of order " + std::to_string(n));
  RingTables t{"[" + B.name() + "," + Q.name() + "]", n, std::vector<int>(n * n), std::vector<int>(n * n), {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int b = x % nb, u = x / nb, c = y % nb, v = y / nb;
      const int s = B.add(B.add(b, c), fs.f[u * nq + v]);
      const int pr = B.add(B.add(B.add(B.mul(b, c), fs.phi[v].right[b]), fs.phi[u].left[c]), fs.g[u * nq + v]);
      t.add[x * n + y] = Q.add(u, v) * nb + s;
      t.mul[x * n + y] = Q.mul(u, v) * nb + pr;
    }
  t.unit = find_unit(t);
  return t;
}

CrossedProduct crossed_product(const FactorSystem& fs) {
  const CheckReport rep = check_factor_system(fs);
  if (rep.find("factor system shapes")) throw AxiomError("factor system shapes", rep.failures[0].witness);
  const int nb = fs.B->order(), nq = fs.Q->order();
  RingTables t = crossed_product_tables(fs);
  if (rep.find("phi pairwise permutable")) {
    auto mul = [&](int x, int y) { return t.mul[x * t.order + y]; };
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v)
        for (int a = 0; a < nb; ++a) {
          const int x = u * nb, y = a, z = v * nb;
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw AxiomError("multiplicative associativity", tuple_str(x, y, z));
        }
  }
  if (!rep.ok()) throw AxiomError(rep.failures[0].equation, rep.failures[0].witness);
  const RingPtr E = prefixed("crossed product: ", [&] { return make_ring(t); });
  if (!E->unit()) throw AxiomError("crossed product has a unit", E->name());
  CrossedProduct out{E, std::vector<int>(nb), std::vector<int>(E->order())};
  for (int b = 0; b < nb; ++b) out.j[b] = b;
  for (int x = 0; x < E->order(); ++x) out.p[x] = x / nb;
  return out;
}

Extension crossed_product_extension(const ESystem& base, const FactorSystem& fs, const std::vector<int>& x) {
  CrossedProduct cp = crossed_product(fs);
  const int nb = base.B->order();
  std::vector<int> eps(cp.E->order());
  for (int e = 0; e < cp.E->order(); ++e) eps[e] = base.D->add(base.d[e % nb], x[e / nb]);
  return validate_extension(base, cp.E, fs.Q, cp.j, cp.p, std::move(eps));
}

std::vector<int> least_lifts(const Extension& ext) {
  std::vector<int> lifts(ext.Q->order(), -1);
  for (int e = 0; e < ext.E->order(); ++e)
    if (lifts[ext.p[e]] < 0) lifts[ext.p[e]] = e;
  return lifts;
}

FactorSystem factor_system_from_extension(const Extension& ext, const std::vector<int>& lifts) {
  const FiniteRing& E = *ext.E;
  const FiniteRing& Q = *ext.Q;
  const int nq = Q.order();
  if (static_cast<int>(lifts.size()) != nq || lifts[0] != 0) throw Error("lifts must start with e_0 = 0");
  for (int u = 0; u < nq; ++u)
    if (ext.p[lifts[u]] != u) throw Error("lift of " + std::to_string(u) + " is not in its fibre");
  const std::vector<int> jinv = inverse_map(ext.j, E.order());
  const ESystem es = extension_esystem(ext);
  FactorSystem fs{ext.base.B, ext.Q, {}, std::vector<int>(nq * nq), std::vector<int>(nq * nq)};
  for (int u = 0; u < nq; ++u) fs.phi.push_back(es.theta[lifts[u]]);
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      fs.f[u * nq + v] = jinv[E.sub(E.add(lifts[u], lifts[v]), lifts[Q.add(u, v)])];
      fs.g[u * nq + v] = jinv[E.sub(E.mul(lifts[u], lifts[v]), lifts[Q.mul(u, v)])];
    }
  return fs;
}

FactorSystem change_lifts(const FactorSystem& fs, const std::vector<int>& t) {
  const FiniteRing& B = *fs.B;
  const FiniteRing& Q = *fs.Q;
  const int nq = Q.order();
  FactorSystem out = fs;
  for (int u = 0; u < nq; ++u) out.phi[u] = bimult_add(B, fs.phi[u], inner(B, t[u]));
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v) {
      const int i = u * nq + v;
      out.f[i] = B.sub(B.add(B.add(fs.f[i], t[u]), t[v]), t[Q.add(u, v)]);
      const int cross = B.add(B.add(fs.phi[u].left[t[v]], fs.phi[v].right[t[u]]), B.mul(t[u], t[v]));
      out.g[i] = B.sub(B.add(fs.g[i], cross), t[Q.mul(u, v)]);
    }
  return out;
}

std::optional<Equivalence> equivalent(const Extension& a, const Extension& b, Int guard) {
  if (!(a.base == b.base)) throw Error("equivalent: different base E-systems");
  if (!(*a.Q == *b.Q)) throw Error("equivalent: different quotient rings");
  if (a.E->order() != b.E->order()) return std::nullopt;
  const FiniteRing& B = *a.base.B;
  const FiniteRing& E = *a.E;
  const FiniteRing& F = *b.E;
  const int nb = B.order(), nq = a.Q->order(), ne = E.order();
  Int space = 1;
  for (int u = 1; u < nq; ++u) {
    space *= nb;
    if (space > guard) throw GuardError("equivalence search over more than " + std::to_string(guard) + " corrections");
  }
  const std::vector<int> ea = least_lifts(a), eb = least_lifts(b);
  std::vector<int> c(nq, 0), eta(ne);
  for (Int it = 0; it < space; ++it) {
    for (int u = 0; u < nq; ++u)
      for (int x = 0; x < nb; ++x) eta[E.add(a.j[x], ea[u])] = F.add(b.j[B.sub(x, c[u])], eb[u]);
    bool ok = true;
    for (int e = 0; ok && e < ne; ++e) ok = b.eps[eta[e]] == a.eps[e];
    for (int x = 0; ok && x < ne; ++x)
      for (int y = 0; ok && y < ne; ++y)
        ok = eta[E.add(x, y)] == F.add(eta[x], eta[y]) && eta[E.mul(x, y)] == F.mul(eta[x], eta[y]);
    if (ok) return Equivalence{eta, c};
    for (int u = 1; u < nq && ++c[u] == nb; ++u) c[u] = 0;
  }
  return std::nullopt;
}

ObstructionDecision extension_obstruction(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi,
                                          Int guard) {
  ReducedAnnCat rc = reduce(base);
  RingHom h = validate_hom(Q, rc.M.ring, psi, true);
  Cochain3 k = pullback3(h, rc.k);
  CoboundaryDecision dec = is_coboundary3(pullback_bimodule(h, rc.M), k, guard);
  return {std::move(h), std::move(rc), std::move(k), std::move(dec)};
}

ExtensionClasses enumerate_extensions(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi, Int guard) {
  ExtensionClasses out{extension_obstruction(base, Q, psi, guard), 0, {}, {}};
  if (!out.obstruction.vanishes()) return out;
  const KernelModule km = induced_kernel_module(base);
  const Section sec = choose_section(base, km);
  const FunctorClassification fc = classify_functors(out.obstruction.psi, out.obstruction.reduced, guard);
  out.h2_order = fc.h2_order;
  const FiniteRing& B = *base.B;
  const RingHom& h = out.obstruction.psi;
  const int nq = Q->order(), nr = km.coker.ring->order();
  std::vector<int> x(nq);
  for (int u = 0; u < nq; ++u) x[u] = sec.sigma[h(u)];
  // With Coker d trivial the section sends 1 to 0; move the lift of 1 to 1_D.
  std::vector<int> t(nq, 0), lift = x;
  const int one = *Q->unit();
  if (x[one] != *base.D->unit()) {
    const int target = base.D->sub(*base.D->unit(), x[one]);
    for (int b = B.order() - 1; b >= 0; --b)
      if (base.d[b] == target) t[one] = b;
    lift[one] = *base.D->unit();
  }
  for (const Cochain2& g : fc.representatives) {
    FactorSystem raw{base.B, Q, {}, std::vector<int>(nq * nq), std::vector<int>(nq * nq)};
    for (int u = 0; u < nq; ++u) raw.phi.push_back(base.theta[x[u]]);
    for (int u = 0; u < nq; ++u)
      for (int v = 0; v < nq; ++v) {
        const int s = h(u) * nr + h(v);
        raw.f[u * nq + v] = B.add(km.kernel[g.at_f(u, v)], sec.phi_plus[s]);
        raw.g[u * nq + v] = B.add(km.kernel[g.at_g(u, v)], sec.phi_times[s]);
      }
    FactorSystem fs = change_lifts(raw, t);
    out.classes.push_back(crossed_product_extension(base, fs, lift));
    out.factor_systems.push_back(std::move(fs));
  }
  for (std::size_t i = 0; i < out.classes.size(); ++i)
    for (std::size_t k = i + 1; k < out.classes.size(); ++k)
      if (equivalent(out.classes[i], out.classes[k]))
        throw Error("enumerate_extensions: classes " + std::to_string(i) + " and " + std::to_string(k) + " are equivalent");
  return out;
}

RawSearch raw_extension_search(const ESystem& base, const RingPtr& Q, const std::vector<int>& psi,
                               bool stop_at_first) {
  const FiniteRing& B = *base.B;
  const FiniteRing& D = *base.D;
  const FiniteRing& q = *Q;
  const int nb = B.order(), nq = q.order(), nd = D.order();
  if (nb * nq > kMaxRingOrder) throw GuardError("raw search over rings of order " + std::to_string(nb * nq));
  const Quotient coker = ideal_cokernel(d_hom(base));
  validate_hom(Q, coker.ring, psi, true);
  std::vector<std::vector<int>> pre(nd);
  for (int b = 0; b < nb; ++b) pre[base.d[b]].push_back(b);
  std::vector<std::vector<int>> xs(nq);
  xs[0] = {0};
  for (int u = 1; u < nq; ++u)
    for (int y = 0; y < nd; ++y)
      if (coker.project[y] == psi[u]) xs[u].push_back(y);

  RawSearch out;
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u < nq; ++u)
    for (int v = 1; v < nq; ++v) slots.push_back({u, v});
  const std::size_t ns = slots.size();

  std::vector<int> xi(nq, 0), x(nq, 0);
  for (;;) {
    for (int u = 0; u < nq; ++u) x[u] = xs[u][xi[u]];
    std::vector<const std::vector<int>*> fl(ns), gl(ns);
    bool empty = false;
    for (std::size_t s = 0; s < ns && !empty; ++s) {
      const auto [u, v] = slots[s];
      fl[s] = &pre[D.sub(D.add(x[u], x[v]), x[q.add(u, v)])];
      gl[s] = &pre[D.sub(D.mul(x[u], x[v]), x[q.mul(u, v)])];
      empty = fl[s]->empty() || gl[s]->empty();
    }
    if (!empty) {
      Int fcount = 1, gcount = 1;
      for (std::size_t s = 0; s < ns; ++s) {
        fcount *= static_cast<Int>(fl[s]->size());
        gcount *= static_cast<Int>(gl[s]->size());
      }
      out.candidates += fcount * gcount;
      FactorSystem fs{base.B, Q, {}, std::vector<int>(nq * nq, 0), std::vector<int>(nq * nq, 0)};
      for (int u = 0; u < nq; ++u) fs.phi.push_back(base.theta[x[u]]);
      std::vector<int> eps(nb * nq);
      for (int e = 0; e < nb * nq; ++e) eps[e] = D.add(base.d[e % nb], x[e / nb]);
      std::vector<std::size_t> fi(ns, 0);
      for (Int a = 0; a < fcount; ++a) {
        for (std::size_t s = 0; s < ns; ++s) fs.f[slots[s].first * nq + slots[s].second] = (*fl[s])[fi[s]];
        // The additive table alone decides whether any g can work.
        std::fill(fs.g.begin(), fs.g.end(), 0);
        const RingTables add_only = crossed_product_tables(fs);
        bool additive = true;
        const int n = add_only.order;
        for (int i = 0; additive && i < n; ++i)
          for (int k = 0; additive && k < n; ++k) {
            additive = add_only.add[i * n + k] == add_only.add[k * n + i];
            for (int l = 0; additive && l < n; ++l)
              additive = add_only.add[add_only.add[i * n + k] * n + l] == add_only.add[i * n + add_only.add[k * n + l]];
          }
        if (additive) {
          std::vector<std::size_t> gi(ns, 0);
          for (Int c = 0; c < gcount; ++c) {
            for (std::size_t s = 0; s < ns; ++s) fs.g[slots[s].first * nq + slots[s].second] = (*gl[s])[gi[s]];
            RingTables t = crossed_product_tables(fs);
            try {
              RingPtr E = make_ring(std::move(t));
              std::vector<int> j(nb), p(nb * nq);
              for (int b = 0; b < nb; ++b) j[b] = b;
              for (int e = 0; e < nb * nq; ++e) p[e] = e / nb;
              Extension ext = validate_extension(base, E, Q, std::move(j), std::move(p), eps);
              ++out.valid;
              if (!out.first) out.first = std::move(ext);
              if (stop_at_first) return out;
            } catch (const AxiomError&) {
            }
            for (std::size_t s = 0; s < ns && ++gi[s] == gl[s]->size(); ++s) gi[s] = 0;
          }
        }
        for (std::size_t s = 0; s < ns && ++fi[s] == fl[s]->size(); ++s) fi[s] = 0;
      }
    }
    int u = 1;
    while (u < nq && ++xi[u] == static_cast<int>(xs[u].size())) xi[u++] = 0;
    if (u >= nq) break;
  }
  return out;
}

std::vector<std::vector<int>> unital_homs(const FiniteRing& q, const FiniteRing& r) {
  std::vector<std::vector<int>> out;
  if (!q.unit() || !r.unit()) return out;
  const int nq = q.order(), nr = r.order(), one = *q.unit();
  std::vector<int> free;
  for (int u = 1; u < nq; ++u)
    if (u != one) free.push_back(u);
  Int space = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    space *= nr;
    if (space > kEquivalenceGuard) throw GuardError("unital_homs: search space too large");
  }
  std::vector<int> map(nq, 0);
  map[one] = *r.unit();
  std::vector<int> digit(free.size(), 0);
  for (Int it = 0; it < space; ++it) {
    for (std::size_t i = 0; i < free.size(); ++i) map[free[i]] = digit[i];
    bool ok = map[0] == 0;
    for (int a = 0; ok && a < nq; ++a)
      for (int b = 0; ok && b < nq; ++b)
        ok = map[q.add(a, b)] == r.add(map[a], map[b]) && map[q.mul(a, b)] == r.mul(map[a], map[b]);
    if (ok) out.push_back(map);
    for (std::size_t i = 0; i < free.size() && ++digit[i] == nr; ++i) digit[i] = 0;
  }
  return out;
}

}  // namespace annring
