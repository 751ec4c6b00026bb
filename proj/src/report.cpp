#include "annring/report.hpp"

#include <algorithm>
#include <sstream>

#include "annring/error.hpp"

namespace annring::report {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string str(Int x) { return std::to_string(x); }

Vec nontrivial(const Vec& moduli) {
  Vec out;
  for (Int m : moduli)
    if (m > 1) out.push_back(m);
  return out;
}

Vec additive_factors(const FiniteRing& r) { return nontrivial(additive_group(r).group().moduli()); }

bool commutative(const FiniteRing& r) {
  for (int a = 0; a < r.order(); ++a)
    for (int b = a + 1; b < r.order(); ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  return true;
}

int count_nonzero(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

// Rows (u, v, value) over nonzero arguments.
std::vector<std::vector<std::string>> rows2(int n, const std::vector<int>& t) {
  std::vector<std::vector<std::string>> rows;
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v) rows.push_back({str(u), str(v), str(t[u * n + v])});
  return rows;
}

std::vector<std::vector<std::string>> rows3(int n, const std::vector<int>& t) {
  std::vector<std::vector<std::string>> rows;
  for (int u = 1; u < n; ++u)
    for (int v = 1; v < n; ++v)
      for (int w = 1; w < n; ++w) rows.push_back({str(u), str(v), str(w), str(t[(u * n + v) * n + w])});
  return rows;
}

void cochain2_tables(Report& r, const std::string& key, const Cochain2& c) {
  r.table(key + " f", {"u", "v", "f(u,v)"}, rows2(c.n, c.f));
  r.table(key + " g", {"u", "v", "g(u,v)"}, rows2(c.n, c.g));
}

void cochain3_tables(Report& r, const std::string& key, const Cochain3& k) {
  r.table(key + " xi", {"x", "y", "z", "xi"}, rows3(k.n, k.xi));
  r.table(key + " eta", {"x", "y", "eta"}, rows2(k.n, k.eta));
  r.table(key + " alpha", {"x", "y", "z", "alpha"}, rows3(k.n, k.alpha));
  r.table(key + " lambda", {"x", "y", "z", "lambda"}, rows3(k.n, k.lambda));
  r.table(key + " rho", {"x", "y", "z", "rho"}, rows3(k.n, k.rho));
}

void square_table(Report& r, const std::string& key, int rows, int cols, const std::vector<int>& t) {
  std::vector<std::string> header{"*"};
  for (int c = 0; c < cols; ++c) header.push_back(str(c));
  std::vector<std::vector<std::string>> out;
  for (int a = 0; a < rows; ++a) {
    std::vector<std::string> row{str(a)};
    for (int c = 0; c < cols; ++c) row.push_back(str(t[a * cols + c]));
    out.push_back(std::move(row));
  }
  r.table(key, std::move(header), std::move(out));
}

void group_line(Report& r, const std::string& key, Int order, const Vec& factors) {
  std::vector<std::string> tsv{str(order)};
  for (Int f : factors) tsv.push_back(str(f));
  r.line(key, group_text(order, factors), std::move(tsv));
}

}  // namespace

void Report::line(const std::string& key, const std::string& text, std::vector<std::string> tsv) {
  if (tsv.empty()) tsv.push_back(text);
  entries_.push_back({key, text, std::move(tsv), {}, {}, false});
}

void Report::table(const std::string& key, std::vector<std::string> header,
                   std::vector<std::vector<std::string>> rows) {
  entries_.push_back({key, "", {}, std::move(header), std::move(rows), true});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Entry e : other.entries_) {
    e.key = prefix + e.key;
    entries_.push_back(std::move(e));
  }
  positive = positive && other.positive;
}

std::string Report::render(Format f) const {
  std::ostringstream os;
  for (const Entry& e : entries_) {
    if (f == Format::tsv) {
      if (!e.is_table) {
        os << e.key;
        for (const auto& v : e.tsv) os << '\t' << v;
        os << '\n';
        continue;
      }
      for (const auto& row : e.rows) {
        os << e.key;
        for (const auto& v : row) os << '\t' << v;
        os << '\n';
      }
      continue;
    }
    if (!e.is_table) {
      os << e.key << ": " << e.text << '\n';
      continue;
    }
    os << e.key << ":";
    if (e.rows.empty()) {
      os << " (none)\n";
      continue;
    }
    os << '\n';
    std::vector<std::size_t> width(e.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      if (row.size() > width.size()) width.resize(row.size(), 0);
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(e.header);
    for (const auto& row : e.rows) widen(row);
    auto put = [&](const std::vector<std::string>& row) {
      std::string s = " ";
      for (std::size_t i = 0; i < row.size(); ++i) {
        s += ' ';
        s += std::string(width[i] - row[i].size(), ' ');
        s += row[i];
      }
      os << s << '\n';
    };
    put(e.header);
    for (const auto& row : e.rows) put(row);
  }
  return os.str();
}

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string list(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string group_text(Int order, const Vec& invariant_factors) {
  return "order " + str(order) + ", invariant factors " + list(invariant_factors);
}

Report ring_report(const FiniteRing& r) {
  Report rep;
  rep.line("ring", r.name());
  group_line(rep, "additive group", r.order(), additive_factors(r));
  rep.line("unit", r.unit() ? str(*r.unit()) : "none");
  rep.line("commutative", yes_no(commutative(r)));
  rep.line("max additive order", str(max_additive_order(r)));
  return rep;
}

Report module_report(const Bimodule& m) {
  Report rep;
  rep.line("ring", m.ring->name());
  group_line(rep, "module", m.module.order(), nontrivial(m.module.group().moduli()));
  return rep;
}

Report esystem_report(const ESystem& es) {
  Report rep;
  rep.line("esystem", es.name);
  rep.line("B", es.B->name() + ", order " + str(es.B->order()), {es.B->name(), str(es.B->order())});
  rep.line("D", es.D->name() + ", order " + str(es.D->order()), {es.D->name(), str(es.D->order())});
  rep.line("d", list(es.d));
  const auto w = regularity_witness(es);
  if (w)
    rep.line("regular", "no, " + w->reason + " at (" + str(w->x) + ", " + str(w->y) + ", " + str(w->a) + ")",
             {"no", w->reason, str(w->x), str(w->y), str(w->a)});
  else
    rep.line("regular", "yes");
  const RingHom d = d_hom(es);
  const std::vector<int> ker = hom_kernel(d);
  group_line(rep, "Ker d", static_cast<Int>(ker.size()), additive_factors(*subring(*es.B, ker, "ker")));
  const Int im = static_cast<Int>(hom_image(d).size());
  rep.line("Im d", "order " + str(im), {str(im)});
  const RingPtr coker = ideal_cokernel(d).ring;
  group_line(rep, "Coker d", coker->order(), additive_factors(*coker));
  return rep;
}

Report crossed_report(const CrossedBimodule& xb) {
  Report rep;
  rep.line("crossed", xb.name);
  rep.line("D", xb.D->name() + ", order " + str(xb.D->order()), {xb.D->name(), str(xb.D->order())});
  rep.line("B order", str(xb.b_order));
  rep.line("d", list(xb.d));
  return rep;
}

Report section_report(const ESystem& es, const Section& sec) {
  Report rep;
  rep.line("esystem", es.name);
  rep.line("sigma", list(sec.sigma));
  const int n = static_cast<int>(sec.sigma.size());
  rep.table("phi_plus", {"s", "r", "phi_plus"}, rows2(n, sec.phi_plus));
  rep.table("phi_times", {"s", "r", "phi_times"}, rows2(n, sec.phi_times));
  return rep;
}

Report extension_report(const Extension& ext) {
  Report rep;
  rep.line("base", ext.base.name);
  group_line(rep, "E", ext.E->order(), additive_factors(*ext.E));
  rep.line("Q", ext.Q->name() + ", order " + str(ext.Q->order()), {ext.Q->name(), str(ext.Q->order())});
  rep.line("psi", list(induced_psi(ext).map));
  rep.line("max additive order", str(max_additive_order(*ext.E)));
  rep.line("commutative", yes_no(commutative(*ext.E)));
  return rep;
}

Report failure_report(const std::string& what, const std::string& axiom, const std::string& witness) {
  Report rep;
  rep.positive = false;
  rep.line(what, "invalid");
  rep.line("axiom", axiom);
  rep.line("witness", witness);
  return rep;
}

Report bimult_report(const BimultRing& mb) {
  Report rep;
  rep.line("B", mb.base->name() + ", order " + str(mb.base->order()), {mb.base->name(), str(mb.base->order())});
  group_line(rep, "M_B", mb.ring->order(), additive_factors(*mb.ring));
  rep.line("M_B commutative", yes_no(commutative(*mb.ring)));
  const RingHom in = inner_hom(mb);
  std::vector<int> inner_elems = hom_image(in);
  rep.line("inner", str(static_cast<Int>(inner_elems.size())));
  rep.line("bicenter", list(bicenter(*mb.base)));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < mb.elements.size(); ++i) {
    std::vector<int> of;
    for (int c = 0; c < mb.base->order(); ++c)
      if (in.map[c] == static_cast<int>(i)) of.push_back(c);
    rows.push_back({str(static_cast<Int>(i)), list(mb.elements[i].left), list(mb.elements[i].right),
                    of.empty() ? "-" : list(of)});
  }
  rep.table("elements", {"index", "left", "right", "inner of"}, std::move(rows));
  return rep;
}

Report anncat_check_report(const ESystem& es, const CheckReport& cr) {
  Report rep;
  rep.positive = cr.ok();
  rep.line("esystem", es.name);
  rep.line("objects", str(es.D->order()));
  rep.line("arrows", str(static_cast<Int>(es.D->order()) * es.B->order()));
  rep.line("anncat check", cr.ok() ? "pass" : "fail");
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : cr.failures) rows.push_back({f.equation, f.witness});
  if (!cr.ok()) rep.table("failures", {"equation", "witness"}, std::move(rows));
  return rep;
}

Report reduce_report(const ESystem& es, const Section& sec, const ReducedAnnCat& rc) {
  Report rep;
  rep.line("esystem", es.name);
  const FiniteRing& R = rc.R();
  group_line(rep, "R", R.order(), additive_factors(R));
  square_table(rep, "R add", R.order(), R.order(), R.add_table());
  square_table(rep, "R mul", R.order(), R.order(), R.mul_table());
  const int m = rc.M.module.order();
  group_line(rep, "M", m, nontrivial(rc.M.module.group().moduli()));
  square_table(rep, "M add", m, m, rc.M.module.add_table());
  square_table(rep, "M left", R.order(), m, rc.M.left);
  std::vector<int> right(static_cast<std::size_t>(R.order()) * m);
  for (int x = 0; x < R.order(); ++x)
    for (int a = 0; a < m; ++a) right[x * m + a] = rc.M.act_right(a, x);
  square_table(rep, "M right", R.order(), m, right);
  rep.line("sigma", list(sec.sigma));
  const int nonzero = count_nonzero(rc.k.xi) + count_nonzero(rc.k.eta) + count_nonzero(rc.k.alpha) +
                      count_nonzero(rc.k.lambda) + count_nonzero(rc.k.rho);
  rep.line("k nonzero entries", str(nonzero));
  cochain3_tables(rep, "k", rc.k);
  return rep;
}

Report h2_report(const H2Result& h) {
  Report rep;
  group_line(rep, "H2", h.order, h.invariant_factors);
  rep.line("Z2", "order " + str(h.z_order), {str(h.z_order)});
  rep.line("B2", "order " + str(h.b_order), {str(h.b_order)});
  group_line(rep, "H2 unit-normalized", h.unit_order, h.unit_invariant_factors);
  const bool agree = h.unit_order == h.order && h.unit_invariant_factors == h.invariant_factors;
  rep.line("unit-normalized agrees", yes_no(agree));
  for (std::size_t i = 0; i < h.representatives.size(); ++i)
    cochain2_tables(rep, "class " + str(static_cast<Int>(i)), h.representatives[i]);
  return rep;
}

Report complex_report(const ComplexCheck& c, std::uint64_t seed) {
  Report rep;
  rep.positive = c.ok();
  rep.line("seed", std::to_string(seed));
  rep.line("d2 d1 = 0", str(c.trials - c.d2d1_failures) + " of " + str(c.trials),
           {str(c.trials - c.d2d1_failures), str(c.trials)});
  rep.line("B2 in Z2", yes_no(c.b2_in_z2));
  rep.line("reduced check on d2 images", str(c.reduced_trials - c.reduced_failures) + " of " + str(c.reduced_trials),
           {str(c.reduced_trials - c.reduced_failures), str(c.reduced_trials)});
  if (c.first_reduced_failure)
    rep.line("first failure", c.first_reduced_failure->equation + " at " + c.first_reduced_failure->witness,
             {c.first_reduced_failure->equation, c.first_reduced_failure->witness});
  return rep;
}

Report obstruction_report(const ObstructionDecision& od) {
  Report rep;
  rep.positive = od.vanishes();
  rep.line("Q", od.psi.source->name() + ", order " + str(od.psi.source->order()),
           {od.psi.source->name(), str(od.psi.source->order())});
  rep.line("psi", list(od.psi.map));
  rep.line("obstruction", od.vanishes() ? "vanishes" : "does not vanish");
  cochain3_tables(rep, "psi*k", od.obstruction);
  if (od.decision.witness)
    cochain2_tables(rep, "witness", *od.decision.witness);
  else {
    rep.line("cokernel of d2", "invariant factors " + list(od.decision.cokernel_factors));
    rep.line("certificate", list(od.decision.certificate));
  }
  return rep;
}

Report classes_report(const ExtensionClasses& ec) {
  Report rep;
  rep.line("psi", list(ec.obstruction.psi.map));
  rep.line("obstruction", ec.obstruction.vanishes() ? "vanishes" : "does not vanish");
  if (ec.obstruction.vanishes()) rep.line("H2", "order " + str(ec.h2_order), {str(ec.h2_order)});
  rep.line("classes", str(static_cast<Int>(ec.classes.size())));
  rep.positive = !ec.classes.empty();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < ec.classes.size(); ++i) {
    const FiniteRing& E = *ec.classes[i].E;
    rows.push_back({str(static_cast<Int>(i)), str(E.order()), list(additive_factors(E)), str(max_additive_order(E)),
                    yes_no(commutative(E))});
  }
  rep.table("extensions", {"class", "order", "additive group", "max additive order", "commutative"}, std::move(rows));
  for (std::size_t i = 0; i < ec.factor_systems.size(); ++i) {
    const FactorSystem& fs = ec.factor_systems[i];
    const std::string key = "class " + str(static_cast<Int>(i));
    const int n = fs.Q->order();
    rep.table(key + " f", {"u", "v", "f(u,v)"}, rows2(n, fs.f));
    rep.table(key + " g", {"u", "v", "g(u,v)"}, rows2(n, fs.g));
  }
  return rep;
}

Report equivalence_report(const std::optional<Equivalence>& eq) {
  Report rep;
  rep.positive = eq.has_value();
  rep.line("equivalent", yes_no(eq.has_value()));
  if (eq) {
    rep.line("eta", list(eq->eta));
    rep.line("c", list(eq->c));
  }
  return rep;
}

Report search_report(const RawSearch& rs) {
  Report rep;
  rep.positive = rs.valid > 0;
  rep.line("candidates", str(rs.candidates));
  rep.line("valid", str(rs.valid));
  rep.line("extension exists", yes_no(rs.valid > 0));
  if (rs.first) rep.append(extension_report(*rs.first), "first ");
  return rep;
}

Report corpus_report(const std::vector<ESystem>& entries) {
  Report rep;
  rep.line("entries", str(static_cast<Int>(entries.size())));
  std::vector<std::vector<std::string>> rows;
  for (const ESystem& es : entries) {
    const RingHom d = d_hom(es);
    rows.push_back({es.name, str(es.B->order()), str(es.D->order()), str(static_cast<Int>(hom_kernel(d).size())),
                    str(ideal_cokernel(d).ring->order()), yes_no(is_regular(es))});
  }
  rep.table("corpus", {"name", "|B|", "|D|", "|Ker d|", "|Coker d|", "regular"}, std::move(rows));
  return rep;
}

}  // namespace annring::report
