#include "annring/annring.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "annring/cohomology.hpp"
#include "annring/corpus.hpp"
#include "annring/error.hpp"
#include "annring/extensions.hpp"
#include "annring/io.hpp"
#include "annring/report.hpp"

using namespace annring;

struct annring_ring {
  RingPtr r;
};
struct annring_module {
  Bimodule m;
};
struct annring_esystem {
  ESystem es;
};
struct annring_section {
  Section s;
};
struct annring_extension {
  Extension e;
};
struct annring_report {
  report::Report rep;
  std::optional<std::string> raw;  // a file rendered verbatim in every format
  std::vector<Extension> extensions;
  std::string rendered;
};

namespace {

thread_local std::string last_error;

annring_status fail(annring_status s, const std::string& what) {
  last_error = what;
  return s;
}

template <class F>
annring_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return ANNRING_OK;
  } catch (const ParseError& e) {
    return fail(ANNRING_ERR_PARSE, e.what());
  } catch (const AxiomError& e) {
    return fail(ANNRING_ERR_AXIOM, e.what());
  } catch (const GuardError& e) {
    return fail(ANNRING_ERR_GUARD, e.what());
  } catch (const OverflowError& e) {
    return fail(ANNRING_ERR_INTERNAL, e.what());
  } catch (const Error& e) {
    return fail(ANNRING_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ANNRING_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ANNRING_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(std::string("null argument: ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Int guard_or(long long g, Int fallback) { return g > 0 ? static_cast<Int>(g) : fallback; }

annring_report* make_report(report::Report rep) {
  auto* r = new annring_report{};
  r->rep = std::move(rep);
  return r;
}

RingPtr preset(const std::string& name) {
  auto suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const int n = std::stoi(rest);
    if (n < 1 || n > kMaxRingOrder) throw Error("preset order out of range: " + name);
    return n;
  };
  if (name == "klein") return zero_mult_klein();
  if (name == "z2xz2") return product(zmod(2), zmod(2));
  if (name == "dual") return dual_numbers_z2();
  if (name == "trivial") return trivial_ring();
  if (auto n = suffix("zero")) return zero_mult(*n);
  if (auto n = suffix("z")) return zmod(*n);
  throw Error("unknown ring preset: " + name);
}

// Q and psi: Q -> Coker d, defaulting to Coker d itself.
std::pair<RingPtr, std::vector<int>> quotient_and_psi(const ESystem& es, const annring_ring* q, const char* psi) {
  const RingPtr coker = ideal_cokernel(d_hom(es)).ring;
  RingPtr Q = q ? q->r : coker;
  const std::string spec = psi ? psi : "id";
  return {Q, io::parse_map(spec, Q->order(), coker->order())};
}

report::Report validate_kind(const std::string& kind, const std::string& path, const char* aux) {
  auto need_aux = [&] {
    if (!aux) throw Error("validate " + kind + " needs a second file");
    return std::string(aux);
  };
  try {
    if (kind == "ring") return report::ring_report(*io::load_ring(path));
    if (kind == "module") {
      const RingPtr r = io::load_ring(need_aux());
      return report::module_report(io::load_module(r, path));
    }
    if (kind == "esystem") return report::esystem_report(io::load_esystem(path));
    if (kind == "crossed") return report::crossed_report(io::load_crossed(path));
    if (kind == "section") {
      const ESystem es = io::load_esystem(need_aux());
      return report::section_report(es, io::load_section(es, path));
    }
    if (kind == "extension") return report::extension_report(io::load_extension(path));
  } catch (const AxiomError& e) {
    return report::failure_report(kind, e.axiom(), e.witness());
  }
  throw Error("unknown kind: " + kind);
}

}  // namespace

extern "C" {

const char* annring_version(void) { return "0.1.0"; }
const char* annring_last_error(void) { return last_error.c_str(); }

const char* annring_status_name(annring_status s) {
  switch (s) {
    case ANNRING_OK: return "ok";
    case ANNRING_ERR_PARSE: return "parse error";
    case ANNRING_ERR_AXIOM: return "axiom violation";
    case ANNRING_ERR_GUARD: return "guard exceeded";
    case ANNRING_ERR_ARGUMENT: return "invalid argument";
    case ANNRING_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void annring_string_free(char* s) { std::free(s); }

annring_status annring_ring_load(const char* path, annring_ring** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new annring_ring{io::load_ring(path)};
  });
}

annring_status annring_ring_parse(const char* text, annring_ring** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new annring_ring{io::parse_ring(text)};
  });
}

annring_status annring_ring_preset(const char* name, annring_ring** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new annring_ring{preset(name)};
  });
}

void annring_ring_free(annring_ring* r) { delete r; }
int annring_ring_order(const annring_ring* r) { return r ? r->r->order() : 0; }
int annring_ring_unit(const annring_ring* r) { return r && r->r->unit() ? *r->r->unit() : -1; }

annring_status annring_ring_add(const annring_ring* r, int a, int b, int* out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    const int n = r->r->order();
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("element out of range");
    *out = r->r->add(a, b);
  });
}

annring_status annring_ring_mul(const annring_ring* r, int a, int b, int* out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    const int n = r->r->order();
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("element out of range");
    *out = r->r->mul(a, b);
  });
}

annring_status annring_ring_write(const annring_ring* r, char** out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    *out = copy_string(io::write_ring(*r->r));
  });
}

annring_status annring_module_load(const annring_ring* r, const char* path, annring_module** out) {
  return guarded([&] {
    require(r, "ring");
    require(path, "path");
    require(out, "out");
    *out = new annring_module{io::load_module(r->r, path)};
  });
}

annring_status annring_module_regular(const annring_ring* r, annring_module** out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    *out = new annring_module{regular_bimodule(r->r)};
  });
}

void annring_module_free(annring_module* m) { delete m; }
int annring_module_order(const annring_module* m) { return m ? m->m.module.order() : 0; }

annring_status annring_esystem_load(const char* path, annring_esystem** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new annring_esystem{io::load_esystem(path)};
  });
}

annring_status annring_esystem_parse(const char* text, annring_esystem** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new annring_esystem{io::parse_esystem(text)};
  });
}

annring_status annring_esystem_corpus(const char* name, annring_esystem** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new annring_esystem{corpus_entry(name)};
  });
}

size_t annring_corpus_size(void) {
  static const std::size_t n = corpus().size();
  return n;
}

const char* annring_corpus_name(size_t index) {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const ESystem& es : corpus()) v.push_back(es.name);
    return v;
  }();
  return index < names.size() ? names[index].c_str() : nullptr;
}

void annring_esystem_free(annring_esystem* es) { delete es; }
int annring_esystem_is_regular(const annring_esystem* es) { return es && is_regular(es->es) ? 1 : 0; }

annring_status annring_esystem_write(const annring_esystem* es, char** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    *out = copy_string(io::write_esystem(es->es));
  });
}

annring_status annring_esystem_write_crossed(const annring_esystem* es, char** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    *out = copy_string(io::write_crossed(es_to_xb(es->es)));
  });
}

annring_status annring_section_load(const annring_esystem* es, const char* path, annring_section** out) {
  return guarded([&] {
    require(es, "esystem");
    require(path, "path");
    require(out, "out");
    *out = new annring_section{io::load_section(es->es, path)};
  });
}

annring_status annring_section_choose(const annring_esystem* es, int greatest, annring_section** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    *out = new annring_section{choose_section(es->es, greatest ? SectionChoice::greatest : SectionChoice::least)};
  });
}

void annring_section_free(annring_section* s) { delete s; }

annring_status annring_extension_load(const char* path, annring_extension** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new annring_extension{io::load_extension(path)};
  });
}

void annring_extension_free(annring_extension* e) { delete e; }
int annring_extension_order(const annring_extension* e) { return e ? e->e.E->order() : 0; }

annring_status annring_extension_write(const annring_extension* e, const char* name, char** out) {
  return guarded([&] {
    require(e, "extension");
    require(out, "out");
    *out = copy_string(io::write_extension(e->e, name ? name : "extension"));
  });
}

void annring_report_free(annring_report* r) { delete r; }

const char* annring_report_render(annring_report* r, annring_format f) {
  if (!r) return "";
  r->rendered = r->raw ? *r->raw
                       : r->rep.render(f == ANNRING_FORMAT_TSV ? report::Format::tsv : report::Format::text);
  return r->rendered.c_str();
}

int annring_report_positive(const annring_report* r) { return r && r->rep.positive ? 1 : 0; }

size_t annring_report_extension_count(const annring_report* r) { return r ? r->extensions.size() : 0; }

annring_status annring_report_extension(const annring_report* r, size_t index, annring_extension** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    if (index >= r->extensions.size()) throw Error("extension index out of range");
    *out = new annring_extension{r->extensions[index]};
  });
}

annring_status annring_validate_file(const char* kind, const char* path, const char* aux, annring_report** out) {
  return guarded([&] {
    require(kind, "kind");
    require(path, "path");
    require(out, "out");
    *out = make_report(validate_kind(kind, path, aux));
  });
}

annring_status annring_convert_file(const char* path, annring_report** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    const std::string text = io::read_file(path);
    const std::string kind = io::file_kind(text, path);
    if (kind == "esystem") {
      const ESystem es = io::parse_esystem(text, path);
      if (const auto w = regularity_witness(es)) {
        *out = make_report(report::failure_report(
            "conversion", w->reason,
            "(" + std::to_string(w->x) + ", " + std::to_string(w->y) + ", " + std::to_string(w->a) + ")"));
        return;
      }
      auto* r = make_report({});
      r->raw = io::write_crossed(es_to_xb(es));
      *out = r;
      return;
    }
    if (kind == "crossed") {
      auto* r = make_report({});
      r->raw = io::write_esystem(xb_to_es(io::parse_crossed(text, path)));
      *out = r;
      return;
    }
    throw Error("convert expects an esystem or crossed file, got " + kind);
  });
}

annring_status annring_describe_esystem(const annring_esystem* es, annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    *out = make_report(report::esystem_report(es->es));
  });
}

annring_status annring_bimult_enumerate(const annring_ring* r, annring_report** out) {
  return guarded([&] {
    require(r, "ring");
    require(out, "out");
    *out = make_report(report::bimult_report(enumerate_bimult(r->r)));
  });
}

annring_status annring_anncat_check(const annring_esystem* es, annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    *out = make_report(report::anncat_check_report(es->es, anncat_axiom_check(build_anncat(es->es))));
  });
}

annring_status annring_anncat_reduce(const annring_esystem* es, const annring_section* s, annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    if (s) {
      *out = make_report(report::reduce_report(es->es, s->s, reduce(es->es, s->s)));
      return;
    }
    const ReducedAnnCat rc = reduce(es->es);
    *out = make_report(report::reduce_report(es->es, choose_section(es->es), rc));
  });
}

annring_status annring_cohom_h2(const annring_module* m, long long guard, annring_report** out) {
  return guarded([&] {
    require(m, "module");
    require(out, "out");
    *out = make_report(report::h2_report(h2(m->m, guard_or(guard, kCohomologyGuard))));
  });
}

annring_status annring_cohom_complex(const annring_module* m, uint64_t seed, int trials, long long guard,
                                     annring_report** out) {
  return guarded([&] {
    require(m, "module");
    require(out, "out");
    if (trials < 0) throw Error("trials must be non-negative");
    *out = make_report(
        report::complex_report(check_complex(m->m, seed, trials, guard_or(guard, kCohomologyGuard)), seed));
  });
}

annring_status annring_cohom_obstruct(const annring_esystem* es, const annring_ring* q, const char* psi,
                                      long long guard, annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    auto [Q, map] = quotient_and_psi(es->es, q, psi);
    *out = make_report(
        report::obstruction_report(extension_obstruction(es->es, Q, map, guard_or(guard, kCohomologyGuard))));
  });
}

annring_status annring_ext_enumerate(const annring_esystem* es, const annring_ring* q, const char* psi,
                                     long long guard, annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    auto [Q, map] = quotient_and_psi(es->es, q, psi);
    ExtensionClasses ec = enumerate_extensions(es->es, Q, map, guard_or(guard, kCohomologyGuard));
    auto* r = make_report(report::classes_report(ec));
    r->extensions = std::move(ec.classes);
    *out = r;
  });
}

annring_status annring_ext_search(const annring_esystem* es, const annring_ring* q, const char* psi,
                                  annring_report** out) {
  return guarded([&] {
    require(es, "esystem");
    require(out, "out");
    auto [Q, map] = quotient_and_psi(es->es, q, psi);
    RawSearch rs = raw_extension_search(es->es, Q, map, false);
    auto* r = make_report(report::search_report(rs));
    if (rs.first) r->extensions.push_back(*rs.first);
    *out = r;
  });
}

annring_status annring_ext_equivalent(const annring_extension* a, const annring_extension* b, long long guard,
                                      annring_report** out) {
  return guarded([&] {
    require(a, "extension");
    require(b, "extension");
    require(out, "out");
    *out = make_report(report::equivalence_report(equivalent(a->e, b->e, guard_or(guard, kEquivalenceGuard))));
  });
}

annring_status annring_corpus_report(annring_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = make_report(report::corpus_report(corpus()));
  });
}

annring_status annring_corpus_export(const char* dir) {
  return guarded([&] {
    require(dir, "dir");
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (const ESystem& es : corpus()) {
      const fs::path p = fs::path(dir) / (es.name + ".esys");
      std::ofstream f(p, std::ios::binary);
      if (!f) throw Error("cannot write " + p.string());
      f << io::write_esystem(es);
    }
  });
}

}  // extern "C"
