#include "annring/anncat.hpp"

#include <functional>

#include "annring/error.hpp"
#include "coboundary.hpp"
#include "witness.hpp"

namespace annring {

using detail::tuple_str;

std::vector<int> StrictAnnCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int b = 0; b < es.B->order(); ++b)
    if (es.D->add(es.d[b], x) == y) out.push_back(b);
  return out;
}

Arrow StrictAnnCat::otimes(const Arrow& a, const Arrow& c) const {
  const FiniteRing& B = *es.B;
  return {es.D->mul(a.source, c.source),
          B.add(B.add(B.mul(a.b, c.b), es.theta_right(a.b, c.source)), es.theta_left(a.source, c.b))};
}

StrictAnnCat build_anncat(const ESystem& es) { return {validate_esystem(es)}; }

StrictAnnCat wrap_anncat(ESystem es) { return {std::move(es)}; }

// ---------------------------------------------------------------------------
// Strict checker. Tables are flattened once; each equation scans its grid and
// stops at the first failing tuple.

namespace {

struct Flat {
  int nb = 0, nd = 0;
  std::vector<int> badd, bmul, dadd, dmul, d, thl, thr;
  std::optional<int> unit;

  explicit Flat(const ESystem& es) : nb(es.B->order()), nd(es.D->order()) {
    badd = es.B->add_table();
    bmul = es.B->mul_table();
    dadd = es.D->add_table();
    dmul = es.D->mul_table();
    d = es.d;
    unit = es.D->unit();
    thl.resize(static_cast<std::size_t>(nd) * nb);
    thr.resize(thl.size());
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b) {
        thl[x * nb + b] = es.theta_left(x, b);
        thr[x * nb + b] = es.theta_right(b, x);
      }
  }

  int ba(int a, int b) const { return badd[a * nb + b]; }
  int bm(int a, int b) const { return bmul[a * nb + b]; }
  int da(int x, int y) const { return dadd[x * nd + y]; }
  int dm(int x, int y) const { return dmul[x * nd + y]; }
  int tgt(int x, int b) const { return da(d[b], x); }
  // b (source x) tensor c (source y)
  int tens(int x, int b, int y, int c) const { return ba(ba(bm(b, c), thr[y * nb + b]), thl[x * nb + c]); }
};

using Witness = std::optional<std::string>;

void run(CheckReport& rep, const std::string& name, const std::function<Witness()>& eq) {
  if (Witness w = eq()) rep.failures.push_back({name, *w});
}

bool in_range(const ESystem& es) {
  const int nb = es.B->order(), nd = es.D->order();
  if (es.d.size() != static_cast<std::size_t>(nb) || es.theta.size() != static_cast<std::size_t>(nd)) return false;
  for (int v : es.d)
    if (v < 0 || v >= nd) return false;
  for (const auto& t : es.theta) {
    if (t.left.size() != static_cast<std::size_t>(nb) || t.right.size() != static_cast<std::size_t>(nb)) return false;
    for (int v : t.left)
      if (v < 0 || v >= nb) return false;
    for (int v : t.right)
      if (v < 0 || v >= nb) return false;
  }
  return true;
}

}  // namespace

CheckReport anncat_axiom_check(const StrictAnnCat& cat) {
  CheckReport rep;
  if (!in_range(cat.es)) {
    rep.failures.push_back({"data well-formed", "table sizes or entries out of range"});
    return rep;
  }
  const Flat t(cat.es);
  const int nb = t.nb, nd = t.nd;

  // Category laws. Composition of x -b-> y -c-> z is b + c.
  run(rep, "composition well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nb; ++c)
          if (t.tgt(x, t.ba(b, c)) != t.tgt(t.tgt(x, b), c)) return tuple_str(x, b, c);
    return std::nullopt;
  });
  run(rep, "composition associative", [&]() -> Witness {
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nb; ++c)
          if (t.ba(t.ba(a, b), c) != t.ba(a, t.ba(b, c))) return tuple_str(a, b, c);
    return std::nullopt;
  });
  run(rep, "identity arrows", [&]() -> Witness {
    for (int b = 0; b < nb; ++b)
      if (t.ba(b, 0) != b || t.ba(0, b) != b) return tuple_str(b);
    return std::nullopt;
  });

  // Well-typedness of the two operations on arrows.
  run(rep, "sum well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int y = 0; y < nd; ++y)
          for (int c = 0; c < nb; ++c)
            if (t.tgt(t.da(x, y), t.ba(b, c)) != t.da(t.tgt(x, b), t.tgt(y, c))) return tuple_str(x, b, y, c);
    return std::nullopt;
  });
  run(rep, "product well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int y = 0; y < nd; ++y)
          for (int c = 0; c < nb; ++c)
            if (t.tgt(t.dm(x, y), t.tens(x, b, y, c)) != t.dm(t.tgt(x, b), t.tgt(y, c))) return tuple_str(x, b, y, c);
    return std::nullopt;
  });

  // Interchange: (b then c) op (b' then c') = (b op b') then (c op c').
  run(rep, "sum interchange", [&]() -> Witness {
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c)
        for (int b2 = 0; b2 < nb; ++b2)
          for (int c2 = 0; c2 < nb; ++c2)
            if (t.ba(t.ba(b, c), t.ba(b2, c2)) != t.ba(t.ba(b, b2), t.ba(c, c2))) return tuple_str(b, c, b2, c2);
    return std::nullopt;
  });
  run(rep, "product interchange", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int x2 = 0; x2 < nd; ++x2)
        for (int b = 0; b < nb; ++b)
          for (int b2 = 0; b2 < nb; ++b2) {
            const int y = t.tgt(x, b), y2 = t.tgt(x2, b2);
            const int first = t.tens(x, b, x2, b2);
            for (int c = 0; c < nb; ++c)
              for (int c2 = 0; c2 < nb; ++c2) {
                const int lhs = t.tens(x, t.ba(b, c), x2, t.ba(b2, c2));
                const int rhs = t.ba(first, t.tens(y, c, y2, c2));
                if (lhs != rhs) return tuple_str(x, b, c, x2, b2, c2);
              }
          }
    return std::nullopt;
  });
  run(rep, "product of identities", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        if (t.tens(x, 0, y, 0) != 0) return tuple_str(x, y);
    return std::nullopt;
  });

  // Strict sum structure on arrows: associativity, commutativity, unit 0.
  run(rep, "sum associative on arrows", [&]() -> Witness {
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        for (int c = 0; c < nb; ++c)
          if (t.ba(t.ba(a, b), c) != t.ba(a, t.ba(b, c))) return tuple_str(a, b, c);
    return std::nullopt;
  });
  run(rep, "sum commutative on arrows", [&]() -> Witness {
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b)
        if (t.ba(a, b) != t.ba(b, a)) return tuple_str(a, b);
    return std::nullopt;
  });
  run(rep, "sum inverse arrows", [&]() -> Witness {
    for (int a = 0; a < nb; ++a) {
      bool found = false;
      for (int b = 0; b < nb && !found; ++b) found = t.ba(a, b) == 0;
      if (!found) return tuple_str(a);
    }
    return std::nullopt;
  });

  // Strict product structure on arrows.
  run(rep, "product associative on arrows", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y) {
        const int xy = t.dm(x, y);
        for (int z = 0; z < nd; ++z) {
          const int yz = t.dm(y, z);
          for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) {
              const int ab = t.tens(x, a, y, b);
              for (int c = 0; c < nb; ++c)
                if (t.tens(xy, ab, z, c) != t.tens(x, a, yz, t.tens(y, b, z, c))) return tuple_str(x, a, y, b, z, c);
            }
        }
      }
    return std::nullopt;
  });
  run(rep, "product unit on arrows", [&]() -> Witness {
    if (!t.unit) return std::string("no unit object");
    const int one = *t.unit;
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        if (t.tens(one, 0, x, b) != b || t.tens(x, b, one, 0) != b) return tuple_str(x, b);
    return std::nullopt;
  });
  run(rep, "product zero on arrows", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        if (t.tens(0, 0, x, b) != 0 || t.tens(x, b, 0, 0) != 0) return tuple_str(x, b);
    return std::nullopt;
  });

  // Strict distributivity on arrows.
  run(rep, "left distributivity on arrows", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (int z = 0; z < nd; ++z) {
          const int yz = t.da(y, z);
          for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) {
              const int ab = t.tens(x, a, y, b);
              for (int c = 0; c < nb; ++c)
                if (t.tens(x, a, yz, t.ba(b, c)) != t.ba(ab, t.tens(x, a, z, c))) return tuple_str(x, a, y, b, z, c);
            }
        }
    return std::nullopt;
  });
  run(rep, "right distributivity on arrows", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y) {
        const int xy = t.da(x, y);
        for (int z = 0; z < nd; ++z)
          for (int a = 0; a < nb; ++a)
            for (int b = 0; b < nb; ++b) {
              const int ab = t.ba(a, b);
              for (int c = 0; c < nb; ++c)
                if (t.tens(xy, ab, z, c) != t.ba(t.tens(x, a, z, c), t.tens(y, b, z, c)))
                  return tuple_str(x, a, y, b, z, c);
            }
      }
    return std::nullopt;
  });
  return rep;
}

ESystem anncat_to_esystem(const StrictAnnCat& cat) {
  const ESystem& es = cat.es;
  const int nb = es.B->order(), nd = es.D->order();
  RingTables b{es.B->name(), nb, std::vector<int>(static_cast<std::size_t>(nb) * nb),
               std::vector<int>(static_cast<std::size_t>(nb) * nb), std::nullopt};
  for (int u = 0; u < nb; ++u)
    for (int v = 0; v < nb; ++v) {
      const Arrow a{0, u}, c{0, v};
      b.add[u * nb + v] = cat.oplus(a, c).b;
      b.mul[u * nb + v] = cat.otimes(a, c).b;
    }
  b.unit = find_unit(b);

  RingTables d{es.D->name(), nd, std::vector<int>(static_cast<std::size_t>(nd) * nd),
               std::vector<int>(static_cast<std::size_t>(nd) * nd), std::nullopt};
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y) {
      d.add[x * nd + y] = cat.oplus(cat.identity(x), cat.identity(y)).source;
      d.mul[x * nd + y] = cat.otimes(cat.identity(x), cat.identity(y)).source;
    }
  d.unit = find_unit(d);

  ESystem out{es.name, make_ring(std::move(b)), make_ring(std::move(d)), std::vector<int>(nb),
              std::vector<Bimultiplication>(nd, {std::vector<int>(nb), std::vector<int>(nb)})};
  for (int u = 0; u < nb; ++u) out.d[u] = cat.target({0, u});
  for (int x = 0; x < nd; ++x)
    for (int u = 0; u < nb; ++u) {
      out.theta[x].left[u] = cat.otimes(cat.identity(x), {0, u}).b;
      out.theta[x].right[u] = cat.otimes({0, u}, cat.identity(x)).b;
    }
  return validate_esystem(std::move(out));
}

// ---------------------------------------------------------------------------
// Functors.

AnnFunctor functor_from_morphism(const StrictAnnCat& source, const StrictAnnCat& target, const ESysMorphism& m,
                                 int fplus, int ftimes) {
  ESysMorphism form = validate_morphism(source.es, target.es, m);
  const ESystem& t = target.es;
  const FiniteRing& B2 = *t.B;
  for (int c : {fplus, ftimes})
    if (c < 0 || c >= B2.order() || t.d[c] != 0) throw AxiomError("constraint constant in Ker d'", tuple_str(c));
  const int sum = B2.add(fplus, ftimes);
  for (int x = 0; x < source.es.D->order(); ++x) {
    const int fx = form.f0[x];
    if (t.theta_left(fx, ftimes) != ftimes || t.theta_right(ftimes, fx) != ftimes)
      throw AxiomError("product constant fixed by theta", tuple_str(x));
    if (t.theta_left(fx, fplus) != sum || t.theta_right(fplus, fx) != sum)
      throw AxiomError("sum constant shifted by theta", tuple_str(x));
  }
  return {source, target, std::move(form), fplus, ftimes};
}

CheckReport ann_functor_check(const AnnFunctor& f) {
  CheckReport rep;
  const StrictAnnCat& S = f.source;
  const StrictAnnCat& T = f.target;
  const FiniteRing& B = *S.es.B;
  const FiniteRing& D = *S.es.D;
  const FiniteRing& B2 = *T.es.B;
  const int nb = B.order(), nd = D.order();
  auto F0 = [&](int x) { return f.form.f0[x]; };
  auto F1 = [&](int b) { return f.form.f1[b]; };

  run(rep, "functor well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        if (T.target(f.apply({x, b})) != F0(S.target({x, b}))) return tuple_str(x, b);
    return std::nullopt;
  });
  run(rep, "functor preserves composition", [&]() -> Witness {
    if (F1(0) != 0) return tuple_str(0);
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c)
        if (F1(B.add(b, c)) != B2.add(F1(b), F1(c))) return tuple_str(b, c);
    return std::nullopt;
  });
  run(rep, "sum constraint well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        if (T.target({F0(D.add(x, y)), f.fplus}) != T.es.D->add(F0(x), F0(y))) return tuple_str(x, y);
    return std::nullopt;
  });
  run(rep, "product constraint well-typed", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        if (T.target({F0(D.mul(x, y)), f.ftimes}) != T.es.D->mul(F0(x), F0(y))) return tuple_str(x, y);
    return std::nullopt;
  });
  run(rep, "sum constraint natural", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int y = 0; y < nd; ++y)
          for (int c = 0; c < nb; ++c) {
            const int lhs = B2.add(f.apply(S.oplus({x, b}, {y, c})).b, f.fplus);
            const int rhs = B2.add(f.fplus, T.oplus(f.apply({x, b}), f.apply({y, c})).b);
            if (lhs != rhs) return tuple_str(x, b, y, c);
          }
    return std::nullopt;
  });
  run(rep, "product constraint natural", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int b = 0; b < nb; ++b)
        for (int y = 0; y < nd; ++y)
          for (int c = 0; c < nb; ++c) {
            const int lhs = B2.add(f.apply(S.otimes({x, b}, {y, c})).b, f.ftimes);
            const int rhs = B2.add(f.ftimes, T.otimes(f.apply({x, b}), f.apply({y, c})).b);
            if (lhs != rhs) return tuple_str(x, b, y, c);
          }
    return std::nullopt;
  });
  // The constraints of both categories are identities, so each square reads
  // (constraint, then operation with identity) on both paths.
  run(rep, "sum constraint compatible with associativity", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (int z = 0; z < nd; ++z) {
          const Arrow c1{F0(D.add(x, D.add(y, z))), f.fplus};
          const int lhs = T.then(c1, T.oplus(T.identity(F0(x)), {F0(D.add(y, z)), f.fplus})).b;
          const int rhs = T.then(c1, T.oplus({F0(D.add(x, y)), f.fplus}, T.identity(F0(z)))).b;
          if (lhs != rhs) return tuple_str(x, y, z);
        }
    return std::nullopt;
  });
  run(rep, "product constraint compatible with associativity", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (int z = 0; z < nd; ++z) {
          const Arrow c1{F0(D.mul(x, D.mul(y, z))), f.ftimes};
          const int lhs = T.then(c1, T.otimes(T.identity(F0(x)), {F0(D.mul(y, z)), f.ftimes})).b;
          const int rhs = T.then(c1, T.otimes({F0(D.mul(x, y)), f.ftimes}, T.identity(F0(z)))).b;
          if (lhs != rhs) return tuple_str(x, y, z);
        }
    return std::nullopt;
  });
  run(rep, "constraints compatible with left distributivity", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (int z = 0; z < nd; ++z) {
          const Arrow c1{F0(D.mul(x, D.add(y, z))), f.ftimes};
          const int lhs = T.then(c1, T.otimes(T.identity(F0(x)), {F0(D.add(y, z)), f.fplus})).b;
          const Arrow s{F0(D.add(D.mul(x, y), D.mul(x, z))), f.fplus};
          const int rhs = T.then(s, T.oplus({F0(D.mul(x, y)), f.ftimes}, {F0(D.mul(x, z)), f.ftimes})).b;
          if (lhs != rhs) return tuple_str(x, y, z);
        }
    return std::nullopt;
  });
  run(rep, "constraints compatible with right distributivity", [&]() -> Witness {
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (int z = 0; z < nd; ++z) {
          const Arrow c1{F0(D.mul(D.add(x, y), z)), f.ftimes};
          const int lhs = T.then(c1, T.otimes({F0(D.add(x, y)), f.fplus}, T.identity(F0(z)))).b;
          const Arrow s{F0(D.add(D.mul(x, z), D.mul(y, z))), f.fplus};
          const int rhs = T.then(s, T.oplus({F0(D.mul(x, z)), f.ftimes}, {F0(D.mul(y, z)), f.ftimes})).b;
          if (lhs != rhs) return tuple_str(x, y, z);
        }
    return std::nullopt;
  });
  return rep;
}

ESysMorphism morphism_from_functor(const AnnFunctor& f) {
  const auto& D = *f.source.es.D;
  const auto& D2 = *f.target.es.D;
  if (f.form.f0.empty() || f.form.f0[0] != 0) throw AxiomError("single functor F(0) = 0", tuple_str(0));
  if (!D.unit() || !D2.unit() || f.form.f0[*D.unit()] != *D2.unit())
    throw AxiomError("single functor F(1) = 1", tuple_str(D.unit().value_or(-1)));
  return validate_morphism(f.source.es, f.target.es, f.form);
}

std::optional<int> homotopy_between(const AnnFunctor& f, const AnnFunctor& g) {
  if (!(f.form == g.form)) return std::nullopt;
  const StrictAnnCat& T = f.target;
  const FiniteRing& B2 = *T.es.B;
  const FiniteRing& D = *f.source.es.D;
  const int alpha = B2.sub(g.fplus, f.fplus);
  if (T.es.d[alpha] != 0) throw AxiomError("homotopy component is an arrow F(x) -> G(x)", tuple_str(alpha));
  for (int x = 0; x < D.order(); ++x)
    for (int y = 0; y < D.order(); ++y) {
      const int fx = f.form.f0[x], fy = f.form.f0[y];
      // F(x+y) -Fplus-> Fx+Fy -a+a-> Gx+Gy  against  F(x+y) -a-> G(x+y) -Gplus-> Gx+Gy
      const int sum_l = B2.add(f.fplus, T.oplus({fx, alpha}, {fy, alpha}).b);
      const int sum_r = B2.add(alpha, g.fplus);
      if (sum_l != sum_r) throw AxiomError("homotopy compatible with sum constraints", tuple_str(x, y));
      const int prod_l = B2.add(f.ftimes, T.otimes({fx, alpha}, {fy, alpha}).b);
      const int prod_r = B2.add(alpha, g.ftimes);
      if (prod_l != prod_r) throw AxiomError("homotopy compatible with product constraints", tuple_str(x, y));
    }
  return alpha;
}

// ---------------------------------------------------------------------------
// Sections and reduction.

namespace {

int unit_class(const KernelModule& km, const ESystem& es) { return km.coker.project[*es.D->unit()]; }

// Least or greatest b with d(b) = target.
int preimage(const ESystem& es, int target, SectionChoice choice) {
  const int nb = es.B->order();
  if (choice == SectionChoice::least) {
    for (int b = 0; b < nb; ++b)
      if (es.d[b] == target) return b;
  } else {
    for (int b = nb - 1; b >= 0; --b)
      if (es.d[b] == target) return b;
  }
  throw Error("section defect outside the image of d");
}

// B with R acting through theta_sigma.
struct ThetaOps {
  const ESystem& es;
  const std::vector<int>& sigma;
  int add(int a, int b) const { return es.B->add(a, b); }
  int sub(int a, int b) const { return es.B->sub(a, b); }
  int left(int u, int m) const { return es.theta_left(sigma[u], m); }
  int right(int m, int u) const { return es.theta_right(m, sigma[u]); }
};

using detail::ModuleOps;

Cochain3 to_module(const Cochain3& kb, const KernelModule& km) {
  Cochain3 k = kb;
  for (auto* v : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho})
    for (int& e : *v) {
      const int i = km.kernel_index[e];
      if (i < 0) throw Error("structure value outside Ker d");
      e = i;
    }
  return k;
}

}  // namespace

Section choose_section(const ESystem& es, SectionChoice choice) {
  return choose_section(es, induced_kernel_module(es), choice);
}

Section choose_section(const ESystem& es, const KernelModule& km, SectionChoice choice) {
  const FiniteRing& D = *es.D;
  const int n = km.coker.ring->order();
  const int one = unit_class(km, es);
  Section sec;
  sec.sigma.assign(n, -1);
  if (choice == SectionChoice::least) {
    for (int x = 0; x < D.order(); ++x)
      if (sec.sigma[km.coker.project[x]] < 0) sec.sigma[km.coker.project[x]] = x;
  } else {
    for (int x = D.order() - 1; x >= 0; --x)
      if (sec.sigma[km.coker.project[x]] < 0) sec.sigma[km.coker.project[x]] = x;
  }
  // With Coker d trivial the classes of 0 and 1 coincide and 0 wins.
  sec.sigma[one] = *D.unit();
  sec.sigma[0] = 0;

  sec.phi_plus.assign(static_cast<std::size_t>(n) * n, 0);
  sec.phi_times.assign(static_cast<std::size_t>(n) * n, 0);
  const FiniteRing& R = *km.coker.ring;
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      const int xs = sec.sigma[s], xr = sec.sigma[r];
      if (s != 0 && r != 0) sec.phi_plus[s * n + r] = preimage(es, D.sub(D.add(xs, xr), sec.sigma[R.add(s, r)]), choice);
      if (s != 0 && r != 0 && s != one && r != one)
        sec.phi_times[s * n + r] = preimage(es, D.sub(D.mul(xs, xr), sec.sigma[R.mul(s, r)]), choice);
    }
  validate_section(es, km, sec);
  return sec;
}

void validate_section(const ESystem& es, const KernelModule& km, const Section& sec) {
  const FiniteRing& D = *es.D;
  const FiniteRing& R = *km.coker.ring;
  const int n = R.order();
  if (sec.sigma.size() != static_cast<std::size_t>(n) || sec.phi_plus.size() != static_cast<std::size_t>(n) * n ||
      sec.phi_times.size() != sec.phi_plus.size())
    throw Error("section: wrong table sizes");
  for (int s = 0; s < n; ++s)
    if (sec.sigma[s] < 0 || sec.sigma[s] >= D.order() || km.coker.project[sec.sigma[s]] != s)
      throw AxiomError("section representative lies in its class", tuple_str(s));
  const int one = unit_class(km, es);
  if (sec.sigma[0] != 0) throw AxiomError("section sigma(0) = 0", tuple_str(0));
  if (one != 0 && sec.sigma[one] != *D.unit()) throw AxiomError("section sigma(1) = 1", tuple_str(one));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      const int p = sec.phi_plus[s * n + r], m = sec.phi_times[s * n + r];
      if (p < 0 || p >= es.B->order() || m < 0 || m >= es.B->order()) throw Error("section: defect out of range");
      const int xs = sec.sigma[s], xr = sec.sigma[r];
      if (es.d[p] != D.sub(D.add(xs, xr), sec.sigma[R.add(s, r)]))
        throw AxiomError("sum defect boundary", tuple_str(s, r));
      if (es.d[m] != D.sub(D.mul(xs, xr), sec.sigma[R.mul(s, r)]))
        throw AxiomError("product defect boundary", tuple_str(s, r));
      if ((s == 0 || r == 0) && p != 0) throw AxiomError("sum defect normalized", tuple_str(s, r));
      if ((s == 0 || r == 0 || s == one || r == one) && m != 0)
        throw AxiomError("product defect normalized", tuple_str(s, r));
    }
}

CheckReport reduced_axiom_check(const ReducedAnnCat& rc) {
  CheckReport rep;
  const FiniteRing& R = rc.R();
  const Bimodule& M = rc.M;
  const Cochain3& k = rc.k;
  const int n = R.order();
  const auto n3 = static_cast<std::size_t>(n) * n * n;
  if (k.n != n || k.xi.size() != n3 || k.alpha.size() != n3 || k.lambda.size() != n3 || k.rho.size() != n3 ||
      k.eta.size() != static_cast<std::size_t>(n) * n) {
    rep.failures.push_back({"data well-formed", "structure tables have wrong sizes"});
    return rep;
  }
  for (const auto* v : {&k.xi, &k.eta, &k.alpha, &k.lambda, &k.rho})
    for (int e : *v)
      if (e < 0 || e >= M.module.order()) {
        rep.failures.push_back({"data well-formed", "structure value out of range"});
        return rep;
      }

  const TableGroup& G = M.module;
  auto add = [&](std::initializer_list<int> xs) {
    int s = 0;
    for (int x : xs) s = G.add(s, x);
    return s;
  };
  auto neg = [&](int a) { return G.neg(a); };
  auto ls = [&](int u, int m) { return M.act_left(u, m); };
  auto rs = [&](int m, int u) { return M.act_right(m, u); };
  auto pl = [&](int a, int b) { return R.add(a, b); };
  auto tm = [&](int a, int b) { return R.mul(a, b); };
  auto xi = [&](int a, int b, int c) { return k.xi_at(a, b, c); };
  auto eta = [&](int a, int b) { return k.eta_at(a, b); };
  auto al = [&](int a, int b, int c) { return k.alpha_at(a, b, c); };
  auto la = [&](int a, int b, int c) { return k.lambda_at(a, b, c); };
  auto rh = [&](int a, int b, int c) { return k.rho_at(a, b, c); };
  const std::optional<int> unit = R.unit();

  auto grid3 = [&](const std::function<bool(int, int, int)>& ok) -> Witness {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!ok(a, b, c)) return tuple_str(a, b, c);
    return std::nullopt;
  };
  auto grid4 = [&](const std::function<bool(int, int, int, int)>& ok) -> Witness {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int e = 0; e < n; ++e)
            if (!ok(a, b, c, e)) return tuple_str(a, b, c, e);
    return std::nullopt;
  };

  run(rep, "normalized at 0", [&]() -> Witness {
    return grid3([&](int a, int b, int c) {
      if (a != 0 && b != 0 && c != 0) return true;
      if (xi(a, b, c) || al(a, b, c) || la(a, b, c) || rh(a, b, c)) return false;
      return (a != 0 && b != 0) || eta(a, b) == 0;
    });
  });
  run(rep, "product unit triangle", [&]() -> Witness {
    if (!unit) return std::string("no unit");
    const int u = *unit;
    return grid3([&](int a, int b, int) { return al(u, a, b) == 0 && al(a, u, b) == 0 && al(a, b, u) == 0; });
  });
  run(rep, "distributivity with the unit", [&]() -> Witness {
    if (!unit) return std::string("no unit");
    const int u = *unit;
    return grid3([&](int a, int b, int) { return la(u, a, b) == 0 && rh(a, b, u) == 0; });
  });
  run(rep, "sum pentagon", [&]() -> Witness {
    return grid4([&](int x, int y, int z, int t) {
      return add({xi(pl(x, y), z, t), xi(x, y, pl(z, t))}) == add({xi(x, y, z), xi(x, pl(y, z), t), xi(y, z, t)});
    });
  });
  run(rep, "symmetry", [&]() -> Witness {
    return grid3([&](int x, int y, int) { return add({eta(x, y), eta(y, x)}) == 0; });
  });
  run(rep, "regularity", [&]() -> Witness {
    return grid3([&](int x, int, int) { return eta(x, x) == 0; });
  });
  run(rep, "hexagon", [&]() -> Witness {
    return grid3([&](int x, int y, int z) {
      return add({xi(x, y, z), eta(pl(x, y), z), xi(z, x, y)}) == add({eta(y, z), xi(x, z, y), eta(x, z)});
    });
  });
  run(rep, "product pentagon", [&]() -> Witness {
    return grid4([&](int x, int y, int z, int t) {
      return add({al(tm(x, y), z, t), al(x, y, tm(z, t))}) ==
             add({rs(al(x, y, z), t), al(x, tm(y, z), t), ls(x, al(y, z, t))});
    });
  });
  // Ann-1: x -> a x and x -> x a with the distributivity constraints are
  // sum functors compatible with associativity and symmetry.
  run(rep, "left multiplication compatible with sum associativity", [&]() -> Witness {
    return grid4([&](int a, int x, int y, int z) {
      return add({ls(a, xi(x, y, z)), la(a, pl(x, y), z), la(a, x, y)}) ==
             add({la(a, x, pl(y, z)), la(a, y, z), xi(tm(a, x), tm(a, y), tm(a, z))});
    });
  });
  run(rep, "left multiplication compatible with symmetry", [&]() -> Witness {
    return grid3([&](int a, int x, int y) {
      return add({ls(a, eta(x, y)), la(a, y, x)}) == add({la(a, x, y), eta(tm(a, x), tm(a, y))});
    });
  });
  run(rep, "right multiplication compatible with sum associativity", [&]() -> Witness {
    return grid4([&](int x, int y, int z, int a) {
      return add({rs(xi(x, y, z), a), rh(pl(x, y), z, a), rh(x, y, a)}) ==
             add({rh(x, pl(y, z), a), rh(y, z, a), xi(tm(x, a), tm(y, a), tm(z, a))});
    });
  });
  run(rep, "right multiplication compatible with symmetry", [&]() -> Witness {
    return grid3([&](int x, int y, int a) {
      return add({rs(eta(x, y), a), rh(y, x, a)}) == add({rh(x, y, a), eta(tm(x, a), tm(y, a))});
    });
  });

  // Ann-2.
  run(rep, "left distributivity against associativity", [&]() -> Witness {
    return grid4([&](int a, int b, int x, int y) {
      return add({al(a, b, pl(x, y)), la(tm(a, b), x, y)}) ==
             add({ls(a, la(b, x, y)), la(a, tm(b, x), tm(b, y)), al(a, b, x), al(a, b, y)});
    });
  });
  run(rep, "right distributivity against associativity", [&]() -> Witness {
    return grid4([&](int x, int y, int b, int a) {
      return add({al(pl(x, y), b, a), rs(rh(x, y, b), a), rh(tm(x, b), tm(y, b), a)}) ==
             add({rh(x, y, tm(b, a)), al(x, b, a), al(y, b, a)});
    });
  });
  run(rep, "mixed distributivity against associativity", [&]() -> Witness {
    return grid4([&](int a, int x, int y, int b) {
      return add({al(a, pl(x, y), b), rs(la(a, x, y), b), rh(tm(a, x), tm(a, y), b)}) ==
             add({ls(a, rh(x, y, b)), la(a, tm(x, b), tm(y, b)), al(a, x, b), al(a, y, b)});
    });
  });
  // v(U,V,Z,T): (U+V)+(Z+T) -> (U+Z)+(V+T) through associativity and symmetry.
  auto v = [&](int U, int V, int Z, int T) {
    return add({neg(xi(U, V, pl(Z, T))), xi(V, Z, T), eta(V, Z), neg(xi(Z, V, T)), xi(U, Z, pl(V, T))});
  };
  run(rep, "two distributivities", [&]() -> Witness {
    return grid4([&](int a, int b, int x, int y) {
      return add({la(pl(a, b), x, y), rh(a, b, x), rh(a, b, y), v(tm(a, x), tm(b, x), tm(a, y), tm(b, y))}) ==
             add({rh(a, b, pl(x, y)), la(a, x, y), la(b, x, y)});
    });
  });
  return rep;
}

Cochain3 defect_coboundary(const ESystem& es, const KernelModule& km, const Section& sec) {
  const FiniteRing& R = *km.coker.ring;
  const int n = R.order();
  Cochain2 c{n, sec.phi_plus, sec.phi_times};
  return detail::d2_generic(R, ThetaOps{es, sec.sigma}, c);
}

ReducedAnnCat reduce(const ESystem& es, const Section& sec) {
  if (auto w = regularity_witness(es)) throw AxiomError("regular E-system: " + w->reason, tuple_str(w->x, w->y, w->a));
  KernelModule km = induced_kernel_module(es);
  validate_section(es, km, sec);
  ReducedAnnCat rc{km.module, to_module(defect_coboundary(es, km, sec), km)};
  CheckReport rep = reduced_axiom_check(rc);
  if (!rep.ok())
    throw Error("reduction of " + es.name + " fails " + rep.failures[0].equation + " at " + rep.failures[0].witness);
  return rc;
}

ReducedAnnCat reduce(const ESystem& es) {
  if (auto w = regularity_witness(es)) throw AxiomError("regular E-system: " + w->reason, tuple_str(w->x, w->y, w->a));
  return reduce(es, choose_section(es));
}

ReducedFunctor reduce_functor(const AnnFunctor& f) {
  return reduce_functor(f, choose_section(f.source.es), choose_section(f.target.es));
}

ReducedFunctor reduce_functor(const AnnFunctor& f, const Section& ssec, const Section& tsec) {
  const ESystem& S = f.source.es;
  const ESystem& T = f.target.es;
  const KernelModule km = induced_kernel_module(S);
  const KernelModule km2 = induced_kernel_module(T);
  const ReducedAnnCat rc = reduce(S, ssec);
  const ReducedAnnCat rc2 = reduce(T, tsec);
  const FiniteRing& R = rc.R();
  const FiniteRing& B2 = *T.B;
  const int n = R.order();
  const auto& F0 = f.form.f0;
  const auto& F1 = f.form.f1;

  std::vector<int> pmap(n);
  for (int s = 0; s < n; ++s) pmap[s] = km2.coker.project[F0[ssec.sigma[s]]];
  RingHom p = validate_hom(km.coker.ring, km2.coker.ring, pmap, true);

  std::vector<int> q(km.kernel.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = km2.kernel_index[F1[km.kernel[i]]];
    if (q[i] < 0) throw Error("functor does not map Ker d into Ker d'");
  }

  // beta(s): F(sigma s) -> sigma'(p s).
  std::vector<int> beta(n);
  for (int s = 0; s < n; ++s) beta[s] = preimage(T, T.D->sub(tsec.sigma[pmap[s]], F0[ssec.sigma[s]]), SectionChoice::least);

  const int n2 = km2.coker.ring->order();
  const StrictAnnCat& TC = f.target;
  Cochain2 g = Cochain2::zero(n);
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      const int ps = pmap[s], pr = pmap[r];
      int tau = B2.add(F1[ssec.phi_plus[s * n + r]], f.fplus);
      tau = B2.add(tau, B2.add(beta[s], beta[r]));
      tau = B2.sub(tau, beta[R.add(s, r)]);
      tau = B2.sub(tau, tsec.phi_plus[ps * n2 + pr]);
      int nu = B2.add(f.ftimes, F1[ssec.phi_times[s * n + r]]);
      nu = B2.add(nu, TC.otimes({F0[ssec.sigma[s]], beta[s]}, {F0[ssec.sigma[r]], beta[r]}).b);
      nu = B2.sub(nu, beta[R.mul(s, r)]);
      nu = B2.sub(nu, tsec.phi_times[ps * n2 + pr]);
      const int ti = km2.kernel_index[tau], ni = km2.kernel_index[nu];
      if (ti < 0 || ni < 0) throw Error("functor constraint outside Ker d'");
      g.f[s * n + r] = ti;
      g.g[s * n + r] = ni;
    }

  // q_* k - p^* k' = d2(g), with R acting on Ker d' through p.
  const Cochain3 dg = detail::d2_generic(R, ModuleOps{rc2.M, &pmap}, g);
  const TableGroup& G2 = rc2.M.module;
  auto check = [&](const std::vector<int>& k, const std::vector<int>& k2, const std::vector<int>& d, int arity,
                   const char* name) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      std::size_t j = 0, rest = i, scale = 1;
      for (int a = 0; a < arity; ++a) {
        j += static_cast<std::size_t>(pmap[rest % n]) * scale;
        rest /= n;
        scale *= n2;
      }
      if (G2.sub(q[k[i]], k2[j]) != d[i]) throw Error(std::string("functor compatibility fails in ") + name);
    }
  };
  check(rc.k.xi, rc2.k.xi, dg.xi, 3, "xi");
  check(rc.k.eta, rc2.k.eta, dg.eta, 2, "eta");
  check(rc.k.alpha, rc2.k.alpha, dg.alpha, 3, "alpha");
  check(rc.k.lambda, rc2.k.lambda, dg.lambda, 3, "lambda");
  check(rc.k.rho, rc2.k.rho, dg.rho, 3, "rho");
  return {std::move(p), std::move(q), std::move(g)};
}

}  // namespace annring
