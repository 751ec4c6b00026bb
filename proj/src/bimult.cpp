#include "annring/bimult.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "annring/error.hpp"
#include "witness.hpp"

namespace annring {

using detail::tuple_str;

void check_bimultiplication(const FiniteRing& b, const Bimultiplication& s) {
  const int n = b.order();
  if (s.left.size() != static_cast<std::size_t>(n) || s.right.size() != static_cast<std::size_t>(n))
    throw Error("bimultiplication tables must have |B| entries");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (s.left[b.add(x, y)] != b.add(s.left[x], s.left[y])) throw AxiomError("left map additive", tuple_str(x, y));
      if (s.right[b.add(x, y)] != b.add(s.right[x], s.right[y])) throw AxiomError("right map additive", tuple_str(x, y));
      if (s.left[b.mul(x, y)] != b.mul(s.left[x], y)) throw AxiomError("s(ab) = (sa)b", tuple_str(x, y));
      if (s.right[b.mul(x, y)] != b.mul(x, s.right[y])) throw AxiomError("(ab)s = a(bs)", tuple_str(x, y));
      if (b.mul(x, s.left[y]) != b.mul(s.right[x], y)) throw AxiomError("a(sb) = (as)b", tuple_str(x, y));
    }
}

Bimultiplication inner(const FiniteRing& b, int c) {
  Bimultiplication s{std::vector<int>(b.order()), std::vector<int>(b.order())};
  for (int a = 0; a < b.order(); ++a) {
    s.left[a] = b.mul(c, a);
    s.right[a] = b.mul(a, c);
  }
  return s;
}

Bimultiplication zero_bimult(const FiniteRing& b) {
  return {std::vector<int>(b.order(), 0), std::vector<int>(b.order(), 0)};
}

Bimultiplication identity_bimult(const FiniteRing& b) {
  std::vector<int> id(b.order());
  std::iota(id.begin(), id.end(), 0);
  return {id, id};
}

Bimultiplication bimult_add(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t) {
  Bimultiplication r{std::vector<int>(b.order()), std::vector<int>(b.order())};
  for (int a = 0; a < b.order(); ++a) {
    r.left[a] = b.add(s.left[a], t.left[a]);
    r.right[a] = b.add(s.right[a], t.right[a]);
  }
  return r;
}

Bimultiplication bimult_mul(const Bimultiplication& s, const Bimultiplication& t) {
  Bimultiplication r{std::vector<int>(s.left.size()), std::vector<int>(s.left.size())};
  for (std::size_t a = 0; a < s.left.size(); ++a) {
    r.left[a] = s.left[t.left[a]];
    r.right[a] = t.right[s.right[a]];
  }
  return r;
}

std::optional<int> permutability_witness(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t) {
  for (int a = 0; a < b.order(); ++a)
    if (s.left[t.right[a]] != t.right[s.left[a]] || t.left[s.right[a]] != s.right[t.left[a]]) return a;
  return std::nullopt;
}

bool permutable(const FiniteRing& b, const Bimultiplication& s, const Bimultiplication& t) {
  return !permutability_witness(b, s, t).has_value();
}

std::vector<int> bicenter(const FiniteRing& b) {
  std::vector<int> c;
  const Bimultiplication zero = zero_bimult(b);
  for (int x = 0; x < b.order(); ++x)
    if (inner(b, x) == zero) c.push_back(x);
  return c;
}

int BimultRing::index_of(const Bimultiplication& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s);
  if (it == elements.end() || *it != s) return -1;
  return static_cast<int>(it - elements.begin());
}

std::vector<std::vector<int>> additive_endomorphisms(const FiniteRing& b) {
  const TableGroup g = additive_group(b);
  const std::size_t r = g.group().rank();
  std::vector<int> gens(r);
  std::vector<std::vector<int>> choices(r);
  for (std::size_t i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    gens[i] = g.element(e);
    const Int m = g.group().moduli()[i];
    for (int h = 0; h < b.order(); ++h)
      if (m % b.additive_order(h) == 0) choices[i].push_back(h);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> pick(r, 0);
  for (;;) {
    std::vector<int> f(b.order());
    for (int x = 0; x < b.order(); ++x) {
      int acc = 0;
      for (std::size_t i = 0; i < r; ++i) acc = b.add(acc, b.times(g.coords(x)[i], choices[i][pick[i]]));
      f[x] = acc;
    }
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < r && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == r) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BimultRing enumerate_bimult(const RingPtr& b) {
  const FiniteRing& B = *b;
  const int n = B.order();
  if (n > kMaxBimultBase) throw GuardError("enumerate_bimult: |B| exceeds " + std::to_string(kMaxBimultBase));
  const auto endos = additive_endomorphisms(B);
  std::vector<const std::vector<int>*> lefts, rights;
  for (const auto& f : endos) {
    bool l = true, r = true;
    for (int x = 0; x < n && (l || r); ++x)
      for (int y = 0; y < n; ++y) {
        if (f[B.mul(x, y)] != B.mul(f[x], y)) l = false;
        if (f[B.mul(x, y)] != B.mul(x, f[y])) r = false;
      }
    if (l) lefts.push_back(&f);
    if (r) rights.push_back(&f);
  }
  BimultRing mb{b, {}, nullptr};
  for (const auto* l : lefts)
    for (const auto* r : rights) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n; ++y)
          if (B.mul(x, (*l)[y]) != B.mul((*r)[x], y)) {
            ok = false;
            break;
          }
      if (!ok) continue;
      if (static_cast<int>(mb.elements.size()) == kMaxRingOrder)
        throw GuardError("enumerate_bimult: M_B has more than " + std::to_string(kMaxRingOrder) + " elements");
      mb.elements.push_back({*l, *r});
    }
  std::sort(mb.elements.begin(), mb.elements.end());
  const int m = static_cast<int>(mb.elements.size());
  RingTables t{"M(" + B.name() + ")", m, std::vector<int>(static_cast<std::size_t>(m) * m),
               std::vector<int>(static_cast<std::size_t>(m) * m), std::nullopt};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int s = mb.index_of(bimult_add(B, mb.elements[i], mb.elements[j]));
      const int p = mb.index_of(bimult_mul(mb.elements[i], mb.elements[j]));
      if (s < 0 || p < 0) throw Error("enumerate_bimult: M_B not closed (bug)");
      t.add[i * m + j] = s;
      t.mul[i * m + j] = p;
    }
  t.unit = mb.index_of(identity_bimult(B));
  mb.ring = make_ring(std::move(t));
  return mb;
}

RingHom inner_hom(const BimultRing& mb) {
  std::vector<int> map(mb.base->order());
  for (int c = 0; c < mb.base->order(); ++c) map[c] = mb.index_of(inner(*mb.base, c));
  return validate_hom(mb.base, mb.ring, std::move(map), false);
}

}  // namespace annring
