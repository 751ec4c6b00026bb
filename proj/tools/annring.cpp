// Command-line front end over the C API. Exit codes: 0 success, 1 negative
// answer, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "annring/annring.h"

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  long long guard = 0;
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};

using Ring = Handle<annring_ring, annring_ring_free>;
using Module = Handle<annring_module, annring_module_free>;
using ESys = Handle<annring_esystem, annring_esystem_free>;
using Sec = Handle<annring_section, annring_section_free>;
using Ext = Handle<annring_extension, annring_extension_free>;
using Report = Handle<annring_report, annring_report_free>;

struct InputError {
  std::string what;
};

void check(annring_status s) {
  if (s != ANNRING_OK) throw InputError{std::string(annring_status_name(s)) + ": " + annring_last_error()};
}

void load_ring(const std::string& path, Ring& r) { check(annring_ring_load(path.c_str(), &r.p)); }

// A path, or corpus:<name> for a built-in entry.
void load_esystem(const std::string& arg, ESys& es) {
  const std::string prefix = "corpus:";
  if (arg.rfind(prefix, 0) == 0)
    check(annring_esystem_corpus(arg.substr(prefix.size()).c_str(), &es.p));
  else
    check(annring_esystem_load(arg.c_str(), &es.p));
}

annring_format format_of(const Options& o) { return o.format == "tsv" ? ANNRING_FORMAT_TSV : ANNRING_FORMAT_TEXT; }

int emit(const Options& o, Report& r) {
  std::fputs(annring_report_render(r.p, format_of(o)), stdout);
  return annring_report_positive(r.p) ? 0 : 1;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError{"cannot write " + path};
  f << text;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  annring_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rings, E-systems, Ann-categories and ring extensions", "annring"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "tsv"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--guard", o.guard, "Size guard (0 = library default)")->check(CLI::NonNegativeNumber);
  app.set_version_flag("--version", std::string(annring_version()));

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

  // validate
  std::string kind, file, aux;
  auto* validate = app.add_subcommand("validate", "Check a file against the axioms of its structure");
  validate->add_option("kind", kind, "ring | module | esystem | crossed | section | extension")
      ->required()
      ->check(CLI::IsMember({"ring", "module", "esystem", "crossed", "section", "extension"}));
  validate->add_option("file", file, "File, or ring file followed by module file for 'module', "
                                     "E-system file followed by section file for 'section'")
      ->required();
  validate->add_option("second", aux, "Module or section file");
  bind(validate, [&] {
    Report r;
    // module and section take the ambient structure first.
    if (kind == "module" || kind == "section") {
      if (aux.empty()) throw InputError{"validate " + kind + " needs two files"};
      check(annring_validate_file(kind.c_str(), aux.c_str(), file.c_str(), &r.p));
    } else {
      if (!aux.empty()) throw InputError{"validate " + kind + " takes one file"};
      check(annring_validate_file(kind.c_str(), file.c_str(), nullptr, &r.p));
    }
    return emit(o, r);
  });

  // convert
  std::string convert_file;
  auto* convert = app.add_subcommand("convert", "Convert an E-system file to a crossed bimodule file or back");
  convert->add_option("file", convert_file)->required();
  bind(convert, [&] {
    Report r;
    check(annring_convert_file(convert_file.c_str(), &r.p));
    return emit(o, r);
  });

  // bimult
  std::string bimult_ring;
  auto* bimult = app.add_subcommand("bimult", "Bimultiplications");
  bimult->require_subcommand(1);
  auto* bimult_enum = bimult->add_subcommand("enumerate", "The ring M_B of a ring file");
  bimult_enum->add_option("ring", bimult_ring)->required();
  bind(bimult_enum, [&] {
    Ring r;
    load_ring(bimult_ring, r);
    Report rep;
    check(annring_bimult_enumerate(r.p, &rep.p));
    return emit(o, rep);
  });

  // anncat and reduce
  std::string esys_file, section = "auto";
  auto reduce_action = [&] {
    ESys es;
    load_esystem(esys_file, es);
    Sec s;
    if (section == "greatest")
      check(annring_section_choose(es.p, 1, &s.p));
    else if (section != "auto")
      check(annring_section_load(es.p, section.c_str(), &s.p));
    Report r;
    check(annring_anncat_reduce(es.p, s.p, &r.p));
    return emit(o, r);
  };
  auto* anncat = app.add_subcommand("anncat", "The strict Ann-category of an E-system");
  anncat->require_subcommand(1);
  auto* anncat_check = anncat->add_subcommand("check", "Evaluate the strict Ann-category axioms");
  anncat_check->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  bind(anncat_check, [&] {
    ESys es;
    load_esystem(esys_file, es);
    Report r;
    check(annring_anncat_check(es.p, &r.p));
    return emit(o, r);
  });
  auto* anncat_reduce = anncat->add_subcommand("reduce", "Reduced structure (R, M, k)");
  anncat_reduce->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  anncat_reduce->add_option("--section", section, "auto | greatest | section file");
  bind(anncat_reduce, reduce_action);
  auto* reduce = app.add_subcommand("reduce", "Same as 'anncat reduce'");
  reduce->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  reduce->add_option("--section", section, "auto | greatest | section file");
  bind(reduce, reduce_action);

  // cohom
  std::string ring_file, module_file, q_file, psi;
  int trials = 1000;
  auto* cohom = app.add_subcommand("cohom", "Low-degree cohomology");
  cohom->require_subcommand(1);
  auto* cohom_h2 = cohom->add_subcommand("h2", "H2 of a ring with coefficients in a bimodule");
  cohom_h2->add_option("ring", ring_file)->required();
  cohom_h2->add_option("module", module_file)->required();
  bind(cohom_h2, [&] {
    Ring r;
    load_ring(ring_file, r);
    Module m;
    check(annring_module_load(r.p, module_file.c_str(), &m.p));
    Report rep;
    check(annring_cohom_h2(m.p, o.guard, &rep.p));
    return emit(o, rep);
  });
  auto* cohom_complex = cohom->add_subcommand("complex", "Seeded checks of the cochain complex");
  cohom_complex->add_option("ring", ring_file)->required();
  cohom_complex->add_option("module", module_file)->required();
  cohom_complex->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  bind(cohom_complex, [&] {
    Ring r;
    load_ring(ring_file, r);
    Module m;
    check(annring_module_load(r.p, module_file.c_str(), &m.p));
    Report rep;
    check(annring_cohom_complex(m.p, o.seed, trials, o.guard, &rep.p));
    return emit(o, rep);
  });
  auto* cohom_obstruct = cohom->add_subcommand("obstruct", "The obstruction psi*k and whether it vanishes");
  cohom_obstruct->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  cohom_obstruct->add_option("--q", q_file, "Ring file for Q (default Coker d)");
  cohom_obstruct->add_option("--psi", psi, "Map Q -> Coker d: id or u:x,...")->default_val("id");
  bind(cohom_obstruct, [&] {
    ESys es;
    load_esystem(esys_file, es);
    Ring q;
    if (!q_file.empty()) load_ring(q_file, q);
    Report r;
    check(annring_cohom_obstruct(es.p, q.p, psi.c_str(), o.guard, &r.p));
    return emit(o, r);
  });

  // ext
  std::string write_prefix, ext_a, ext_b;
  auto* ext = app.add_subcommand("ext", "Ring extensions of the type of an E-system");
  ext->require_subcommand(1);
  auto* ext_enum = ext->add_subcommand("enum", "One extension per class");
  ext_enum->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  ext_enum->add_option("--q", q_file, "Ring file for Q (default Coker d)");
  ext_enum->add_option("--psi", psi, "Map Q -> Coker d: id or u:x,...")->default_val("id");
  ext_enum->add_option("--write", write_prefix, "Write class i to <prefix><i>.ext");
  bind(ext_enum, [&] {
    ESys es;
    load_esystem(esys_file, es);
    Ring q;
    if (!q_file.empty()) load_ring(q_file, q);
    Report r;
    check(annring_ext_enumerate(es.p, q.p, psi.c_str(), o.guard, &r.p));
    if (!write_prefix.empty())
      for (std::size_t i = 0; i < annring_report_extension_count(r.p); ++i) {
        Ext e;
        check(annring_report_extension(r.p, i, &e.p));
        char* text = nullptr;
        const std::string name = "class" + std::to_string(i);
        check(annring_extension_write(e.p, name.c_str(), &text));
        write_file(write_prefix + std::to_string(i) + ".ext", take(text));
      }
    return emit(o, r);
  });
  auto* ext_search = ext->add_subcommand("search", "Exhaustive search over ring tables, without cohomology");
  ext_search->add_option("esystem", esys_file, "E-system file or corpus:<name>")->required();
  ext_search->add_option("--q", q_file, "Ring file for Q (default Coker d)");
  ext_search->add_option("--psi", psi, "Map Q -> Coker d: id or u:x,...")->default_val("id");
  bind(ext_search, [&] {
    ESys es;
    load_esystem(esys_file, es);
    Ring q;
    if (!q_file.empty()) load_ring(q_file, q);
    Report r;
    check(annring_ext_search(es.p, q.p, psi.c_str(), &r.p));
    return emit(o, r);
  });
  auto* ext_equiv = ext->add_subcommand("equiv", "Decide equivalence of two extensions");
  ext_equiv->add_option("first", ext_a)->required();
  ext_equiv->add_option("second", ext_b)->required();
  bind(ext_equiv, [&] {
    Ext a, b;
    check(annring_extension_load(ext_a.c_str(), &a.p));
    check(annring_extension_load(ext_b.c_str(), &b.p));
    Report r;
    check(annring_ext_equivalent(a.p, b.p, o.guard, &r.p));
    return emit(o, r);
  });

  // corpus
  std::string corpus_name, corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "Built-in E-systems");
  auto* corpus_list = corpus->add_subcommand("list", "Summary of every entry (default)");
  auto list_action = [&] {
    Report r;
    check(annring_corpus_report(&r.p));
    return emit(o, r);
  };
  corpus->callback([&action, &corpus, list_action] {
    if (corpus->get_subcommands().empty()) action = list_action;
  });
  bind(corpus_list, list_action);
  auto* corpus_show = corpus->add_subcommand("show", "Print an entry as an E-system file");
  corpus_show->add_option("name", corpus_name)->required();
  bind(corpus_show, [&] {
    ESys es;
    check(annring_esystem_corpus(corpus_name.c_str(), &es.p));
    char* text = nullptr;
    check(annring_esystem_write(es.p, &text));
    std::fputs(take(text).c_str(), stdout);
    return 0;
  });
  auto* corpus_describe = corpus->add_subcommand("describe", "Invariants of an entry");
  corpus_describe->add_option("name", corpus_name)->required();
  bind(corpus_describe, [&] {
    ESys es;
    check(annring_esystem_corpus(corpus_name.c_str(), &es.p));
    Report r;
    check(annring_describe_esystem(es.p, &r.p));
    return emit(o, r);
  });
  auto* corpus_export = corpus->add_subcommand("export", "Write every entry to <dir>/<name>.esys");
  corpus_export->add_option("dir", corpus_dir)->required();
  bind(corpus_export, [&] {
    check(annring_corpus_export(corpus_dir.c_str()));
    return 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "annring: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "annring: error: " << e.what << '\n';
    return 2;
  }
}
