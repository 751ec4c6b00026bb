#pragma once

// The two coboundaries written once for any coefficient group with a left and
// right action of the ring R. Ops must provide add, sub, left(u, m), right(m, u).

#include "annring/cochain.hpp"
#include "annring/ring.hpp"

namespace annring::detail {

// M with R acting through a ring map p: R -> ring of M.
struct ModuleOps {
  const Bimodule& m;
  const std::vector<int>* p = nullptr;
  int pu(int u) const { return p ? (*p)[u] : u; }
  int add(int a, int b) const { return m.module.add(a, b); }
  int sub(int a, int b) const { return m.module.sub(a, b); }
  int left(int u, int x) const { return m.act_left(pu(u), x); }
  int right(int x, int u) const { return m.act_right(x, pu(u)); }
};

template <class Ops>
Cochain2 d1_generic(const FiniteRing& r, const Ops& m, const Cochain1& t) {
  const int n = r.order();
  Cochain2 c = Cochain2::zero(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      c.f[u * n + v] = m.sub(m.add(t.t[u], t.t[v]), t.t[r.add(u, v)]);
      c.g[u * n + v] = m.sub(m.add(m.left(u, t.t[v]), m.right(t.t[u], v)), t.t[r.mul(u, v)]);
    }
  return c;
}

template <class Ops>
Cochain3 d2_generic(const FiniteRing& r, const Ops& m, const Cochain2& c) {
  const int n = r.order();
  Cochain3 k = Cochain3::zero(n);
  auto f = [&](int u, int v) { return c.f[u * n + v]; };
  auto g = [&](int u, int v) { return c.g[u * n + v]; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      k.eta[u * n + v] = m.sub(f(u, v), f(v, u));
      for (int w = 0; w < n; ++w) {
        const int i = k.idx3(u, v, w);
        k.xi[i] = m.sub(m.add(f(u, r.add(v, w)), f(v, w)), m.add(f(u, v), f(r.add(u, v), w)));
        k.alpha[i] = m.sub(m.add(m.left(u, g(v, w)), g(u, r.mul(v, w))),
                           m.add(g(r.mul(u, v), w), m.right(g(u, v), w)));
        k.lambda[i] = m.sub(m.add(g(u, r.add(v, w)), m.left(u, f(v, w))),
                            m.add(m.add(g(u, v), g(u, w)), f(r.mul(u, v), r.mul(u, w))));
        k.rho[i] = m.sub(m.add(g(r.add(u, v), w), m.right(f(u, v), w)),
                         m.add(m.add(g(u, w), g(v, w)), f(r.mul(u, w), r.mul(v, w))));
      }
    }
  return k;
}

}  // namespace annring::detail
