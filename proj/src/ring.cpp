#include "annring/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "annring/error.hpp"
#include "witness.hpp"

namespace annring {

using detail::tuple_str;

FiniteRing::FiniteRing(RingTables t) : t_(std::move(t)) {
  const int n = t_.order;
  if (n < 1) throw Error("ring " + t_.name + ": order must be >= 1");
  if (n > kMaxRingOrder) throw GuardError("ring " + t_.name + ": order exceeds " + std::to_string(kMaxRingOrder));
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  if (t_.add.size() != cells || t_.mul.size() != cells)
    throw Error("ring " + t_.name + ": tables must have order^2 entries");
  for (std::size_t i = 0; i < cells; ++i)
    if (t_.add[i] < 0 || t_.add[i] >= n || t_.mul[i] < 0 || t_.mul[i] >= n)
      throw Error("ring " + t_.name + ": table entry out of range");
  if (t_.unit && (*t_.unit < 0 || *t_.unit >= n)) throw Error("ring " + t_.name + ": unit out of range");
  neg_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        break;
      }
}

int FiniteRing::times(long k, int a) const {
  int base = k < 0 ? neg(a) : a;
  unsigned long m = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  int acc = 0;
  while (m) {
    if (m & 1) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return acc;
}

int FiniteRing::additive_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

FiniteRing validate_ring(RingTables t) {
  FiniteRing r(std::move(t));
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    if (r.add(0, x) != x || r.add(x, 0) != x) throw AxiomError("additive identity", tuple_str(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.add(x, y) != r.add(y, x)) throw AxiomError("additive commutativity", tuple_str(x, y));
  for (int x = 0; x < n; ++x)
    if (r.neg(x) < 0) throw AxiomError("additive inverse", tuple_str(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) throw AxiomError("additive associativity", tuple_str(x, y, z));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = r.mul(x, y);
      for (int z = 0; z < n; ++z) {
        if (r.mul(xy, z) != r.mul(x, r.mul(y, z))) throw AxiomError("multiplicative associativity", tuple_str(x, y, z));
        if (r.mul(x, r.add(y, z)) != r.add(xy, r.mul(x, z)))
          throw AxiomError("left distributivity", tuple_str(x, y, z));
        if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z)))
          throw AxiomError("right distributivity", tuple_str(x, y, z));
      }
    }
  if (auto u = r.unit())
    for (int x = 0; x < n; ++x)
      if (r.mul(*u, x) != x || r.mul(x, *u) != x) throw AxiomError("unit", tuple_str(x));
  return r;
}

RingPtr make_ring(RingTables t) { return std::make_shared<const FiniteRing>(validate_ring(std::move(t))); }

// ---------------------------------------------------------------------------

TableGroup::TableGroup(std::vector<int> add, int order) : order_(order), add_(std::move(add)) {
  const int n = order_;
  if (n < 1 || add_.size() != static_cast<std::size_t>(n) * n) throw Error("TableGroup: bad table shape");
  neg_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (this->add(a, b) == 0) neg_[a] = b;
  for (int a = 0; a < n; ++a)
    if (neg_[a] < 0) throw AxiomError("additive inverse", tuple_str(a));

  // Greedy generating set: add any element outside the span found so far.
  std::vector<int> gens;
  std::vector<bool> in_span(n, false);
  in_span[0] = true;
  for (int a = 0; a < n; ++a) {
    if (in_span[a]) continue;
    gens.push_back(a);
    std::vector<int> frontier;
    for (int x = 0; x < n; ++x)
      if (in_span[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gens) {
          int y = this->add(x, g);
          if (!in_span[y]) {
            in_span[y] = true;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  // Z^n modulo e_0 and e_a + e_g - e_{a+g} for generators g is the group.
  ablin::IntMatrix rel(n, 1 + static_cast<std::size_t>(n) * gens.size());
  rel(0, 0) = 1;
  std::size_t col = 1;
  for (int a = 0; a < n; ++a)
    for (int g : gens) {
      rel(a, col) += 1;
      rel(g, col) += 1;
      rel(this->add(a, g), col) -= 1;
      ++col;
    }
  ablin::ModularSmith sf = ablin::smith_mod(rel, n);
  Vec moduli;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < sf.diagonal.size(); ++i)
    if (sf.diagonal[i] != 1) {
      moduli.push_back(sf.diagonal[i]);
      keep.push_back(i);
    }
  group_ = ablin::FinAbGroup(moduli);
  if (group_.order() != n) throw AxiomError("abelian group", "table of order " + std::to_string(n));
  coords_.resize(n);
  from_index_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    Vec c(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) c[k] = arith::mod(sf.U(keep[k], a), moduli[k]);
    coords_[a] = c;
    from_index_[group_.index_of(c)] = a;
  }
}

int TableGroup::element(std::span<const Int> c) const { return from_index_[group_.index_of(c)]; }

TableGroup additive_group(const FiniteRing& r) { return TableGroup(r.add_table(), r.order()); }

// ---------------------------------------------------------------------------

RingHom validate_hom(RingPtr source, RingPtr target, std::vector<int> map, bool require_unital) {
  const int n = source->order();
  if (map.size() != static_cast<std::size_t>(n)) throw Error("ring map has wrong length");
  for (int v : map)
    if (v < 0 || v >= target->order()) throw Error("ring map value out of range");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (map[source->add(x, y)] != target->add(map[x], map[y])) throw AxiomError("additivity", tuple_str(x, y));
      if (map[source->mul(x, y)] != target->mul(map[x], map[y])) throw AxiomError("multiplicativity", tuple_str(x, y));
    }
  if (require_unital) {
    if (!source->unit() || !target->unit()) throw AxiomError("unital map", "ring without unit");
    if (map[*source->unit()] != *target->unit()) throw AxiomError("unital map", tuple_str(*source->unit()));
  }
  return {std::move(source), std::move(target), std::move(map)};
}

RingHom identity_hom(RingPtr r) {
  std::vector<int> m(r->order());
  std::iota(m.begin(), m.end(), 0);
  return {r, r, std::move(m)};
}

RingHom compose(const RingHom& g, const RingHom& f) {
  if (!(*f.target == *g.source)) throw Error("compose: rings do not match");
  std::vector<int> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return {f.source, g.target, std::move(m)};
}

// ---------------------------------------------------------------------------

Bimodule validate_bimodule(RingPtr ring, TableGroup module, std::vector<int> left, std::vector<int> right) {
  const int n = ring->order(), m = module.order();
  if (left.size() != static_cast<std::size_t>(n) * m || right.size() != static_cast<std::size_t>(n) * m)
    throw Error("bimodule action tables have wrong size");
  for (int v : left)
    if (v < 0 || v >= m) throw Error("bimodule action value out of range");
  for (int v : right)
    if (v < 0 || v >= m) throw Error("bimodule action value out of range");
  Bimodule b{std::move(ring), std::move(module), std::move(left), std::move(right)};
  const FiniteRing& R = *b.ring;
  const TableGroup& M = b.module;
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c) {
        if (b.act_left(x, M.add(a, c)) != M.add(b.act_left(x, a), b.act_left(x, c)))
          throw AxiomError("left action additive in module", tuple_str(x, a, c));
        if (b.act_right(M.add(a, c), x) != M.add(b.act_right(a, x), b.act_right(c, x)))
          throw AxiomError("right action additive in module", tuple_str(a, c, x));
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int a = 0; a < m; ++a) {
        if (b.act_left(R.add(x, y), a) != M.add(b.act_left(x, a), b.act_left(y, a)))
          throw AxiomError("left action additive in ring", tuple_str(x, y, a));
        if (b.act_right(a, R.add(x, y)) != M.add(b.act_right(a, x), b.act_right(a, y)))
          throw AxiomError("right action additive in ring", tuple_str(a, x, y));
        if (b.act_left(R.mul(x, y), a) != b.act_left(x, b.act_left(y, a)))
          throw AxiomError("(xy)m = x(ym)", tuple_str(x, y, a));
        if (b.act_right(a, R.mul(x, y)) != b.act_right(b.act_right(a, x), y))
          throw AxiomError("m(xy) = (mx)y", tuple_str(a, x, y));
        if (b.act_right(b.act_left(x, a), y) != b.act_left(x, b.act_right(a, y)))
          throw AxiomError("(xm)y = x(my)", tuple_str(x, a, y));
      }
  if (auto u = R.unit())
    for (int a = 0; a < m; ++a)
      if (b.act_left(*u, a) != a || b.act_right(a, *u) != a) throw AxiomError("unital action", tuple_str(a));
  return b;
}

Bimodule regular_bimodule(RingPtr r) {
  const int n = r->order();
  std::vector<int> left(static_cast<std::size_t>(n) * n), right(left.size());
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      left[x * n + a] = r->mul(x, a);
      right[a * n + x] = r->mul(a, x);
    }
  return validate_bimodule(r, additive_group(*r), std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------

namespace {

RingTables cyclic_tables(const std::string& name, int n, const std::function<int(int, int)>& mul) {
  RingTables t{name, n, std::vector<int>(static_cast<std::size_t>(n) * n), std::vector<int>(static_cast<std::size_t>(n) * n), std::nullopt};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      t.add[a * n + b] = (a + b) % n;
      t.mul[a * n + b] = mul(a, b);
    }
  return t;
}

}  // namespace

RingPtr zmod(int n) {
  if (n < 1) throw Error("zmod: n must be >= 1");
  RingTables t = cyclic_tables("zmod(" + std::to_string(n) + ")", n, [n](int a, int b) { return a * b % n; });
  t.unit = 1 % n;
  return make_ring(std::move(t));
}

RingPtr zero_mult(int n) {
  if (n < 1) throw Error("zero_mult: n must be >= 1");
  return make_ring(cyclic_tables("zero_mult(" + std::to_string(n) + ")", n, [](int, int) { return 0; }));
}

RingPtr scaled_mult(int n, int c) {
  if (n < 1) throw Error("scaled_mult: n must be >= 1");
  return make_ring(cyclic_tables("scaled_mult(" + std::to_string(n) + "," + std::to_string(c) + ")", n,
                                 [n, c](int a, int b) { return ((c % n + n) % n) * a % n * b % n; }));
}

RingPtr product(const RingPtr& r, const RingPtr& s) {
  const int nr = r->order(), ns = s->order(), n = nr * ns;
  RingTables t{r->name() + "x" + s->name(), n, std::vector<int>(static_cast<std::size_t>(n) * n),
               std::vector<int>(static_cast<std::size_t>(n) * n), std::nullopt};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ar = a / ns, as = a % ns, br = b / ns, bs = b % ns;
      t.add[a * n + b] = r->add(ar, br) * ns + s->add(as, bs);
      t.mul[a * n + b] = r->mul(ar, br) * ns + s->mul(as, bs);
    }
  if (r->unit() && s->unit()) t.unit = *r->unit() * ns + *s->unit();
  return make_ring(std::move(t));
}

RingPtr zero_mult_klein() {
  RingTables t{"zero_mult_klein", 4, std::vector<int>(16), std::vector<int>(16, 0), std::nullopt};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.add[a * 4 + b] = a ^ b;
  return make_ring(std::move(t));
}

RingPtr dual_numbers_z2() {
  RingTables t{"z2_dual", 4, std::vector<int>(16), std::vector<int>(16), 1};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      t.add[a * 4 + b] = a ^ b;
      // (a0 + a1 x)(b0 + b1 x) = a0 b0 + (a0 b1 + a1 b0) x
      const int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
      t.mul[a * 4 + b] = (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1);
    }
  return make_ring(std::move(t));
}

RingPtr trivial_ring() { return make_ring({"trivial", 1, {0}, {0}, 0}); }

// ---------------------------------------------------------------------------

std::vector<int> hom_kernel(const RingHom& d) {
  std::vector<int> k;
  for (int x = 0; x < d.source->order(); ++x)
    if (d(x) == 0) k.push_back(x);
  return k;
}

std::vector<int> hom_image(const RingHom& d) {
  std::vector<bool> hit(d.target->order(), false);
  for (int v : d.map) hit[v] = true;
  std::vector<int> im;
  for (int y = 0; y < d.target->order(); ++y)
    if (hit[y]) im.push_back(y);
  return im;
}

Quotient quotient_ring(const RingPtr& d, const std::vector<int>& ideal, const std::string& name) {
  const int n = d->order();
  std::vector<bool> in(n, false);
  for (int i : ideal) in[i] = true;
  if (ideal.empty() || !in[0]) throw AxiomError("ideal contains 0", "");
  for (int i : ideal)
    for (int j : ideal)
      if (!in[d->add(i, j)]) throw AxiomError("ideal closed under +", tuple_str(i, j));
  for (int x = 0; x < n; ++x)
    for (int i : ideal) {
      if (!in[d->mul(x, i)]) throw AxiomError("image not an ideal (left)", tuple_str(x, i));
      if (!in[d->mul(i, x)]) throw AxiomError("image not an ideal (right)", tuple_str(i, x));
    }
  Quotient q;
  q.project.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (q.project[x] >= 0) continue;
    const int cls = static_cast<int>(q.representative.size());
    q.representative.push_back(x);
    for (int i : ideal) q.project[d->add(x, i)] = cls;
  }
  const int m = static_cast<int>(q.representative.size());
  RingTables t{name, m, std::vector<int>(static_cast<std::size_t>(m) * m), std::vector<int>(static_cast<std::size_t>(m) * m), std::nullopt};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      t.add[a * m + b] = q.project[d->add(q.representative[a], q.representative[b])];
      t.mul[a * m + b] = q.project[d->mul(q.representative[a], q.representative[b])];
    }
  if (auto u = d->unit()) t.unit = q.project[*u];
  q.ring = make_ring(std::move(t));
  return q;
}

Quotient ideal_cokernel(const RingHom& d) {
  return quotient_ring(d.target, hom_image(d), "coker(" + d.target->name() + ")");
}

RingPtr subring(const FiniteRing& r, const std::vector<int>& elements, const std::string& name) {
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(r.order(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  if (m == 0 || elements[0] != 0) throw Error("subring: element list must start with 0");
  RingTables t{name, m, std::vector<int>(static_cast<std::size_t>(m) * m), std::vector<int>(static_cast<std::size_t>(m) * m), std::nullopt};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int s = pos[r.add(elements[a], elements[b])], p = pos[r.mul(elements[a], elements[b])];
      if (s < 0) throw AxiomError("subset closed under +", tuple_str(elements[a], elements[b]));
      if (p < 0) throw AxiomError("subset closed under *", tuple_str(elements[a], elements[b]));
      t.add[a * m + b] = s;
      t.mul[a * m + b] = p;
    }
  if (auto u = r.unit(); u && pos[*u] >= 0) t.unit = pos[*u];
  return make_ring(std::move(t));
}

int max_additive_order(const FiniteRing& r) {
  int best = 1;
  for (int x = 0; x < r.order(); ++x) best = std::max(best, r.additive_order(x));
  return best;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  const int n = a.order();
  if (n != b.order()) return std::nullopt;
  if (n > 16) throw GuardError("find_isomorphism: order exceeds 16");
  if (a.unit().has_value() != b.unit().has_value()) return std::nullopt;
  std::vector<int> f(n, -1), finv(n, -1);
  f[0] = 0;
  finv[0] = 0;
  std::vector<int> order_a(n), order_b(n);
  for (int x = 0; x < n; ++x) {
    order_a[x] = a.additive_order(x);
    order_b[x] = b.additive_order(x);
  }
  // Consistency of all table entries among assigned elements.
  auto consistent = [&](int x) {
    for (int y = 0; y < n; ++y) {
      if (f[y] < 0) continue;
      for (int pass = 0; pass < 2; ++pass) {
        const int p = pass ? y : x, q = pass ? x : y;
        const int s = a.add(p, q), m = a.mul(p, q);
        if (f[s] >= 0 && f[s] != b.add(f[p], f[q])) return false;
        if (f[s] < 0 && finv[b.add(f[p], f[q])] >= 0) return false;
        if (f[m] >= 0 && f[m] != b.mul(f[p], f[q])) return false;
        if (f[m] < 0 && finv[b.mul(f[p], f[q])] >= 0) return false;
      }
    }
    return true;
  };
  std::function<bool(int)> go = [&](int x) -> bool {
    if (x == n) return true;
    if (f[x] >= 0) return go(x + 1);
    for (int y = 0; y < n; ++y) {
      if (finv[y] >= 0 || order_a[x] != order_b[y]) continue;
      f[x] = y;
      finv[y] = x;
      if (consistent(x) && go(x + 1)) return true;
      f[x] = -1;
      finv[y] = -1;
    }
    return false;
  };
  if (a.unit()) {
    f[*a.unit()] = *b.unit();
    finv[*b.unit()] = *a.unit();
    if (*a.unit() != 0 && *b.unit() == 0) return std::nullopt;
    if (!consistent(*a.unit())) return std::nullopt;
  }
  if (!go(1)) return std::nullopt;
  return f;
}

std::optional<int> find_unit(const RingTables& t) {
  for (int u = 0; u < t.order; ++u) {
    bool ok = true;
    for (int x = 0; x < t.order && ok; ++x) ok = t.mul[u * t.order + x] == x && t.mul[x * t.order + u] == x;
    if (ok) return u;
  }
  return std::nullopt;
}

}  // namespace annring
