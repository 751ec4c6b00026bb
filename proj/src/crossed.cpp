#include "annring/crossed.hpp"

#include <numeric>

#include "annring/error.hpp"
#include "witness.hpp"

namespace annring {

using detail::tuple_str;

namespace {

void check_sizes(const ESystem& es) {
  if (!es.B || !es.D) throw Error("esystem " + es.name + ": missing ring");
  if (es.d.size() != static_cast<std::size_t>(es.B->order())) throw Error("esystem " + es.name + ": d has wrong length");
  if (es.theta.size() != static_cast<std::size_t>(es.D->order()))
    throw Error("esystem " + es.name + ": theta has wrong length");
  for (int v : es.d)
    if (v < 0 || v >= es.D->order()) throw Error("esystem " + es.name + ": d value out of range");
  for (const auto& t : es.theta) {
    if (t.left.size() != static_cast<std::size_t>(es.B->order()) || t.right.size() != t.left.size())
      throw Error("esystem " + es.name + ": theta row has wrong length");
    for (std::size_t i = 0; i < t.left.size(); ++i)
      if (t.left[i] < 0 || t.left[i] >= es.B->order() || t.right[i] < 0 || t.right[i] >= es.B->order())
        throw Error("esystem " + es.name + ": theta value out of range");
  }
}

}  // namespace

ESystem validate_esystem(ESystem es) {
  check_sizes(es);
  const FiniteRing& B = *es.B;
  const FiniteRing& D = *es.D;
  const int nb = B.order(), nd = D.order();
  if (!D.unit()) throw AxiomError("D has a unit", D.name());
  validate_hom(es.B, es.D, es.d, false);
  for (int x = 0; x < nd; ++x) {
    try {
      check_bimultiplication(B, es.theta[x]);
    } catch (const AxiomError& e) {
      throw AxiomError("theta_x is a bimultiplication (" + e.axiom() + ")", "x=" + std::to_string(x) + " " + e.witness());
    }
  }
  for (int b = 0; b < nb; ++b) {
    const Bimultiplication mu = inner(B, b);
    if (es.theta[es.d[b]] != mu) throw AxiomError("theta(d(b)) = mu_b", tuple_str(b));
  }
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < nb; ++b) {
      if (es.d[es.theta_left(x, b)] != D.mul(x, es.d[b])) throw AxiomError("d(theta_x b) = x d(b)", tuple_str(x, b));
      if (es.d[es.theta_right(b, x)] != D.mul(es.d[b], x)) throw AxiomError("d(b theta_x) = d(b) x", tuple_str(x, b));
    }
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y) {
      if (es.theta[D.add(x, y)] != bimult_add(B, es.theta[x], es.theta[y]))
        throw AxiomError("theta additive", tuple_str(x, y));
      if (es.theta[D.mul(x, y)] != bimult_mul(es.theta[x], es.theta[y]))
        throw AxiomError("theta multiplicative", tuple_str(x, y));
    }
  return es;
}

RingHom d_hom(const ESystem& es) { return {es.B, es.D, es.d}; }

std::optional<RegularityWitness> regularity_witness(const ESystem& es) {
  const FiniteRing& B = *es.B;
  const int one = *es.D->unit();
  const Bimultiplication id = identity_bimult(B);
  for (int a = 0; a < B.order(); ++a)
    if (es.theta[one].left[a] != a || es.theta[one].right[a] != a)
      return RegularityWitness{"theta(1) is not the identity", one, one, a};
  for (int x = 0; x < es.D->order(); ++x)
    for (int y = x; y < es.D->order(); ++y)
      if (auto a = permutability_witness(B, es.theta[x], es.theta[y]))
        return RegularityWitness{"theta(x), theta(y) not permutable", x, y, *a};
  return std::nullopt;
}

bool is_regular(const ESystem& es) { return !regularity_witness(es).has_value(); }

// ---------------------------------------------------------------------------

CrossedBimodule validate_crossed_bimodule(CrossedBimodule xb) {
  if (!xb.D) throw Error("crossed bimodule " + xb.name + ": missing ring D");
  const FiniteRing& D = *xb.D;
  const int nb = xb.b_order, nd = D.order();
  if (xb.b_add.size() != static_cast<std::size_t>(nb) * nb || xb.d.size() != static_cast<std::size_t>(nb))
    throw Error("crossed bimodule " + xb.name + ": bad table sizes");
  if (!D.unit()) throw AxiomError("D has a unit", D.name());
  TableGroup group(xb.b_add, nb);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      if (group.add(a, b) != group.add(b, a)) throw AxiomError("additive commutativity", tuple_str(a, b));
      for (int c = 0; c < nb; ++c)
        if (group.add(group.add(a, b), c) != group.add(a, group.add(b, c)))
          throw AxiomError("additive associativity", tuple_str(a, b, c));
    }
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      if (xb.d[group.add(a, b)] != D.add(xb.d[a], xb.d[b])) throw AxiomError("d additive", tuple_str(a, b));
  validate_bimodule(xb.D, group, xb.left, xb.right);
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < nb; ++b) {
      if (xb.d[xb.act_left(x, b)] != D.mul(x, xb.d[b])) throw AxiomError("d(xb) = x d(b)", tuple_str(x, b));
      if (xb.d[xb.act_right(b, x)] != D.mul(xb.d[b], x)) throw AxiomError("d(bx) = d(b) x", tuple_str(b, x));
    }
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c)
      if (xb.act_left(xb.d[b], c) != xb.act_right(b, xb.d[c])) throw AxiomError("d(b)b' = b d(b')", tuple_str(b, c));
  return xb;
}

CrossedBimodule es_to_xb(const ESystem& es) {
  if (auto w = regularity_witness(es))
    throw AxiomError("regularity (" + w->reason + ")", tuple_str(w->x, w->y, w->a));
  const int nb = es.B->order(), nd = es.D->order();
  CrossedBimodule xb{es.name, es.B->name(), nb, es.B->add_table(), es.D, es.d,
                     std::vector<int>(static_cast<std::size_t>(nb) * nd), std::vector<int>(static_cast<std::size_t>(nb) * nd)};
  for (int x = 0; x < nd; ++x)
    for (int b = 0; b < nb; ++b) {
      xb.left[x * nb + b] = es.theta_left(x, b);
      xb.right[b * nd + x] = es.theta_right(b, x);
    }
  return validate_crossed_bimodule(std::move(xb));
}

ESystem xb_to_es(const CrossedBimodule& xb) {
  const int nb = xb.b_order;
  RingTables t{xb.b_name, nb, xb.b_add, std::vector<int>(static_cast<std::size_t>(nb) * nb), std::nullopt};
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c) t.mul[b * nb + c] = xb.act_left(xb.d[b], c);
  t.unit = find_unit(t);
  RingPtr B = make_ring(std::move(t));
  ESystem es{xb.name, B, xb.D, xb.d, theta_from_action(*B, *xb.D, xb.left, xb.right)};
  return validate_esystem(std::move(es));
}

// ---------------------------------------------------------------------------

ESysMorphism validate_morphism(const ESystem& src, const ESystem& tgt, ESysMorphism m) {
  validate_hom(src.B, tgt.B, m.f1, false);
  validate_hom(src.D, tgt.D, m.f0, true);
  for (int b = 0; b < src.B->order(); ++b)
    if (m.f0[src.d[b]] != tgt.d[m.f1[b]]) throw AxiomError("f0 d = d' f1", tuple_str(b));
  for (int x = 0; x < src.D->order(); ++x)
    for (int b = 0; b < src.B->order(); ++b) {
      if (m.f1[src.theta_left(x, b)] != tgt.theta_left(m.f0[x], m.f1[b]))
        throw AxiomError("f1(theta_x b) = theta'_{f0 x} f1(b)", tuple_str(x, b));
      if (m.f1[src.theta_right(b, x)] != tgt.theta_right(m.f1[b], m.f0[x]))
        throw AxiomError("f1(b theta_x) = f1(b) theta'_{f0 x}", tuple_str(x, b));
    }
  return m;
}

XBMorphism validate_xb_morphism(const CrossedBimodule& src, const CrossedBimodule& tgt, XBMorphism m) {
  const int nb = src.b_order;
  if (m.k1.size() != static_cast<std::size_t>(nb)) throw Error("k1 has wrong length");
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      if (m.k1[src.b_add[a * nb + b]] != tgt.b_add[m.k1[a] * tgt.b_order + m.k1[b]])
        throw AxiomError("k1 additive", tuple_str(a, b));
  validate_hom(src.D, tgt.D, m.k0, true);
  for (int b = 0; b < nb; ++b)
    if (m.k0[src.d[b]] != tgt.d[m.k1[b]]) throw AxiomError("k0 d = d' k1", tuple_str(b));
  for (int x = 0; x < src.D->order(); ++x)
    for (int b = 0; b < nb; ++b) {
      if (m.k1[src.act_left(x, b)] != tgt.act_left(m.k0[x], m.k1[b])) throw AxiomError("k1(xb) = k0(x) k1(b)", tuple_str(x, b));
      if (m.k1[src.act_right(b, x)] != tgt.act_right(m.k1[b], m.k0[x])) throw AxiomError("k1(bx) = k1(b) k0(x)", tuple_str(x, b));
    }
  return m;
}

XBMorphism morphism_to_xb(const ESystem& src, const ESystem& tgt, const ESysMorphism& m) {
  validate_morphism(src, tgt, m);
  return validate_xb_morphism(es_to_xb(src), es_to_xb(tgt), {m.f1, m.f0});
}

ESysMorphism morphism_to_es(const CrossedBimodule& src, const CrossedBimodule& tgt, const XBMorphism& m) {
  validate_xb_morphism(src, tgt, m);
  return validate_morphism(xb_to_es(src), xb_to_es(tgt), {m.k1, m.k0});
}

ESysMorphism identity_morphism(const ESystem& es) {
  ESysMorphism m{std::vector<int>(es.B->order()), std::vector<int>(es.D->order())};
  std::iota(m.f1.begin(), m.f1.end(), 0);
  std::iota(m.f0.begin(), m.f0.end(), 0);
  return m;
}

namespace {
std::vector<int> after(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = g[f[i]];
  return r;
}
}  // namespace

ESysMorphism compose(const ESysMorphism& g, const ESysMorphism& f) { return {after(g.f1, f.f1), after(g.f0, f.f0)}; }
XBMorphism compose(const XBMorphism& g, const XBMorphism& f) { return {after(g.k1, f.k1), after(g.k0, f.k0)}; }

// ---------------------------------------------------------------------------

KernelModule induced_kernel_module(const ESystem& es) {
  const FiniteRing& B = *es.B;
  KernelModule km;
  km.kernel = hom_kernel(d_hom(es));
  const std::vector<int> center = bicenter(B);
  std::vector<bool> in_center(B.order(), false);
  for (int c : center) in_center[c] = true;
  for (int a : km.kernel)
    if (!in_center[a]) throw AxiomError("Ker d inside the bicenter", tuple_str(a));
  km.coker = ideal_cokernel(d_hom(es));

  const int nk = static_cast<int>(km.kernel.size());
  km.kernel_index.assign(B.order(), -1);
  for (int i = 0; i < nk; ++i) km.kernel_index[km.kernel[i]] = i;
  std::vector<int> add(static_cast<std::size_t>(nk) * nk);
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) add[i * nk + j] = km.kernel_index[B.add(km.kernel[i], km.kernel[j])];

  const FiniteRing& Q = *km.coker.ring;
  const int nq = Q.order();
  std::vector<int> left(static_cast<std::size_t>(nq) * nk, -1), right(left.size(), -1);
  for (int x = 0; x < es.D->order(); ++x) {
    const int s = km.coker.project[x];
    for (int i = 0; i < nk; ++i) {
      const int l = km.kernel_index[es.theta_left(x, km.kernel[i])];
      const int r = km.kernel_index[es.theta_right(km.kernel[i], x)];
      if (l < 0 || r < 0) throw AxiomError("theta preserves Ker d", tuple_str(x, km.kernel[i]));
      int& L = left[s * nk + i];
      int& R = right[i * nq + s];
      if ((L >= 0 && L != l) || (R >= 0 && R != r))
        throw AxiomError("action independent of representative", tuple_str(x, km.kernel[i]));
      L = l;
      R = r;
    }
  }
  km.module = validate_bimodule(km.coker.ring, TableGroup(std::move(add), nk), std::move(left), std::move(right));
  return km;
}

// ---------------------------------------------------------------------------

std::vector<Bimultiplication> theta_from_action(const FiniteRing& b, const FiniteRing& d, const std::vector<int>& left,
                                                const std::vector<int>& right) {
  const int nb = b.order(), nd = d.order();
  std::vector<Bimultiplication> theta(nd, {std::vector<int>(nb), std::vector<int>(nb)});
  for (int x = 0; x < nd; ++x)
    for (int a = 0; a < nb; ++a) {
      theta[x].left[a] = left[x * nb + a];
      theta[x].right[a] = right[a * nd + x];
    }
  return theta;
}

ESystem example3(const RingPtr& d_ring, const std::vector<int>& ideal, const std::string& name) {
  RingTables sub = subring(*d_ring, ideal, name + ".B")->tables();
  sub.unit = find_unit(sub);
  RingPtr B = make_ring(std::move(sub));
  const int nb = B->order(), nd = d_ring->order();
  std::vector<int> pos(nd, -1);
  for (int i = 0; i < nb; ++i) pos[ideal[i]] = i;
  std::vector<Bimultiplication> theta(nd, {std::vector<int>(nb), std::vector<int>(nb)});
  for (int x = 0; x < nd; ++x)
    for (int i = 0; i < nb; ++i) {
      theta[x].left[i] = pos[d_ring->mul(x, ideal[i])];
      theta[x].right[i] = pos[d_ring->mul(ideal[i], x)];
      if (theta[x].left[i] < 0 || theta[x].right[i] < 0) throw AxiomError("B is an ideal of D", tuple_str(x, ideal[i]));
    }
  return validate_esystem({name, B, d_ring, ideal, std::move(theta)});
}

ESystem example4(const Bimodule& module, const std::string& name) {
  const int m = module.module.order();
  RingTables t{name + ".B", m, module.module.add_table(), std::vector<int>(static_cast<std::size_t>(m) * m, 0),
               m == 1 ? std::optional<int>(0) : std::nullopt};
  RingPtr B = make_ring(std::move(t));
  return validate_esystem({name, B, module.ring, std::vector<int>(m, 0),
                           theta_from_action(*B, *module.ring, module.left, module.right)});
}

ESystem example5(const RingPtr& b, const std::string& name) {
  BimultRing mb = enumerate_bimult(b);
  RingHom mu = inner_hom(mb);
  return validate_esystem({name, b, mb.ring, mu.map, mb.elements});
}

ESystem twob_esystem() {
  RingPtr B = scaled_mult(4, 2);
  RingPtr D = zmod(4);
  std::vector<Bimultiplication> theta(4, {std::vector<int>(4), std::vector<int>(4)});
  for (int x = 0; x < 4; ++x)
    for (int b = 0; b < 4; ++b) theta[x].left[b] = theta[x].right[b] = x * b % 4;
  return validate_esystem({"twob", B, D, {0, 2, 0, 2}, std::move(theta)});
}

}  // namespace annring
