#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "annring/corpus.hpp"
#include "annring/error.hpp"
#include "annring/io.hpp"
#include "annring/report.hpp"

using namespace annring;

namespace {

void expect_parse_error(const std::function<void()>& f, int line, int column) {
  try {
    f();
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("annring_io_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void put(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(RingFormat, PresetsRoundTrip) {
  for (const RingPtr& r : {zmod(1), zmod(4), zmod(6), zero_mult_klein(), product(zmod(2), zmod(3)),
                           dual_numbers_z2(), scaled_mult(4, 2)}) {
    const RingPtr back = io::parse_ring(io::write_ring(*r));
    EXPECT_EQ(*back, *r) << r->name();
  }
}

TEST(RingFormat, CommentsAndLayoutAreFree) {
  const RingPtr r = io::parse_ring("# Z/2\nring z2 order 2 add 0 1 1 0 # table\nmul 0 0\n 0 1\nunit 1\n");
  EXPECT_EQ(*r, *zmod(2));
  EXPECT_EQ(r->name(), "z2");
  EXPECT_FALSE(io::parse_ring("ring z order 2 add 0 1 1 0 mul 0 0 0 0 unit none")->unit().has_value());
}

TEST(RingFormat, ParseErrorsCiteLineAndColumn) {
  expect_parse_error([] { io::parse_ring("ring x\norder 2\nadd 0 1 1 0\nmul 0 0 0 7\nunit 1\n"); }, 4, 11);
  expect_parse_error([] { io::parse_ring("ring x\norder two\n"); }, 2, 7);
  expect_parse_error([] { io::parse_ring("ring x\norder 2\nadd 0 1 1 0\nmul 0 0\n"); }, 5, 1);
  expect_parse_error([] { io::parse_ring("ring x\norder 1\nadd 0\nmul 0\nunit 0\nextra\n"); }, 6, 1);
  expect_parse_error([] { io::parse_ring("rung x"); }, 1, 1);
  expect_parse_error([] { io::parse_ring("ring x order 0"); }, 1, 14);
}

TEST(RingFormat, AxiomViolationsAreNotParseErrors) {
  try {
    io::parse_ring("ring x order 2 add 0 1 1 1 mul 0 0 0 1 unit 1");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "well-formed tables should reach validation";
  } catch (const AxiomError& e) {
    EXPECT_EQ(e.axiom(), "additive inverse");
  }
  EXPECT_NO_THROW(io::parse_ring_tables("ring x order 2 add 0 1 1 1 mul 0 0 0 1 unit 1"));
}

TEST(ModuleFormat, RoundTrip) {
  for (const Bimodule& m : {regular_bimodule(zmod(2)), regular_bimodule(zmod(4)), bimodule_via(zmod(4), zmod(2), {0, 1, 0, 1})}) {
    const Bimodule back = io::parse_module(m.ring, io::write_module(m, "m"));
    EXPECT_EQ(back.left, m.left);
    EXPECT_EQ(back.right, m.right);
    EXPECT_EQ(back.module.add_table(), m.module.add_table());
  }
}

TEST(ModuleFormat, RejectsNonModules) {
  // Z/2 on Z/2 with 1 acting as 0.
  EXPECT_THROW(io::parse_module(zmod(2), "module m order 2 add 0 1 1 0 left 0 0 0 0 right 0 0 0 1"), AxiomError);
}

TEST(ESystemFormat, CorpusRoundTrips) {
  for (const ESystem& es : corpus()) {
    const ESystem back = io::parse_esystem(io::write_esystem(es));
    EXPECT_EQ(back, es) << es.name;
    EXPECT_EQ(back.name, es.name);
  }
}

TEST(ESystemFormat, RingPathsResolveAgainstTheFile) {
  const auto dir = scratch("paths");
  std::filesystem::create_directories(dir / "sub");
  put(dir / "z2.ring", io::write_ring(*zmod(2)));
  put(dir / "sub" / "b.ring", io::write_ring(*zero_mult(2)));
  put(dir / "ex4.esys",
      "esystem ex4\nB sub/b.ring\nD z2.ring\nd 0 0\ntheta_left 0 0 0 1\ntheta_right 0 0 0 1\n");
  const ESystem es = io::load_esystem((dir / "ex4.esys").string());
  EXPECT_EQ(es, corpus_entry("ex4-z2"));
}

TEST(ESystemFormat, ErrorsInIncludedFilesNameThatFile) {
  const auto dir = scratch("nested");
  put(dir / "bad.ring", "ring b\norder 2\nadd 0 1 1 0\nmul 0 0 0 9\nunit none\n");
  put(dir / "e.esys", "esystem e\nB bad.ring\nD bad.ring\n");
  try {
    io::load_esystem((dir / "e.esys").string());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.ring:4:11"), std::string::npos) << e.what();
  }
  put(dir / "m.esys", "esystem e\nB missing.ring\n");
  expect_parse_error([&] { io::load_esystem((dir / "m.esys").string()); }, 2, 3);
}

TEST(ESystemFormat, ThetaIsValidatedOnLoad) {
  const std::string text = io::write_esystem(corpus_entry("ex4-z2"));
  const std::string rows = "theta_left\n  0 0\n  0 1";
  const auto pos = text.find(rows);
  ASSERT_NE(pos, std::string::npos);
  // theta_0 acting as the identity on the left is not a ring map.
  std::string bad = text;
  bad.replace(pos, rows.size(), "theta_left\n  0 1\n  0 1");
  EXPECT_THROW(io::parse_esystem(bad), AxiomError);
  // theta_1 = (0, id) is still an E-system over a zero ring, but not regular.
  std::string weak = text;
  weak.replace(pos, rows.size(), "theta_left\n  0 0\n  0 0");
  EXPECT_FALSE(is_regular(io::parse_esystem(weak)));
}

TEST(CrossedFormat, RoundTripsThroughConversion) {
  for (const ESystem& es : corpus()) {
    if (!is_regular(es)) continue;
    const CrossedBimodule xb = es_to_xb(es);
    const CrossedBimodule back = io::parse_crossed(io::write_crossed(xb));
    EXPECT_EQ(back, xb) << es.name;
    EXPECT_EQ(xb_to_es(back), es) << es.name;
  }
}

TEST(SectionFormat, RoundTrip) {
  for (const ESystem& es : corpus()) {
    if (!is_regular(es)) continue;
    for (SectionChoice c : {SectionChoice::least, SectionChoice::greatest}) {
      const Section sec = choose_section(es, c);
      EXPECT_EQ(io::parse_section(es, io::write_section(sec)), sec) << es.name;
    }
  }
}

TEST(SectionFormat, RejectsWrongDefects) {
  const ESystem es = corpus_entry("ex3-2z4");
  Section sec = choose_section(es);
  sec.phi_plus[1 * 2 + 1] = 0;  // sigma(1) + sigma(1) = 2 needs the preimage of 2
  EXPECT_ANY_THROW(io::parse_section(es, io::write_section(sec)));
}

TEST(ExtensionFormat, RoundTrip) {
  const ExtensionClasses ec = enumerate_extensions(corpus_entry("ex4-z2"), zmod(2), {0, 1});
  ASSERT_EQ(ec.classes.size(), 2u);
  for (const Extension& ext : ec.classes) {
    const Extension back = io::parse_extension(io::write_extension(ext, "e"));
    EXPECT_EQ(*back.E, *ext.E);
    EXPECT_EQ(*back.Q, *ext.Q);
    EXPECT_EQ(back.base, ext.base);
    EXPECT_EQ(back.j, ext.j);
    EXPECT_EQ(back.p, ext.p);
    EXPECT_EQ(back.eps, ext.eps);
  }
}

TEST(ExtensionFormat, RejectsBadMaps) {
  const ExtensionClasses ec = enumerate_extensions(corpus_entry("ex4-z2"), zmod(2), {0, 1});
  Extension ext = ec.classes[0];
  ext.p = {0, 0, 0, 0};
  EXPECT_THROW(io::parse_extension(io::write_extension(ext, "e")), AxiomError);
}

TEST(FileKind, FirstKeyword) {
  EXPECT_EQ(io::file_kind(io::write_ring(*zmod(2))), "ring");
  EXPECT_EQ(io::file_kind("# comment\nesystem x"), "esystem");
  EXPECT_THROW(io::file_kind("banana"), ParseError);
  EXPECT_THROW(io::file_kind(""), ParseError);
}

TEST(MapFormat, PairsAndIdentity) {
  EXPECT_EQ(io::parse_map("id", 3, 3), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(io::parse_map("0:0,1:1,2:0,3:1", 4, 2), (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(io::parse_map("1:1,0:0", 2, 2), (std::vector<int>{0, 1}));
  EXPECT_THROW(io::parse_map("id", 4, 2), Error);
  EXPECT_THROW(io::parse_map("0:0", 2, 2), Error);
  EXPECT_THROW(io::parse_map("0:0,1:2", 2, 2), Error);
  EXPECT_THROW(io::parse_map("0:0,0:1", 2, 2), Error);
  EXPECT_THROW(io::parse_map("0-0,1:1", 2, 2), Error);
}

TEST(Report, TextAndTsv) {
  report::Report r;
  r.line("H2", "order 2, invariant factors [2]", {"2", "2"});
  r.table("t", {"u", "v"}, {{"1", "10"}});
  EXPECT_EQ(r.render(report::Format::text), "H2: order 2, invariant factors [2]\nt:\n  u  v\n  1 10\n");
  EXPECT_EQ(r.render(report::Format::tsv), "H2\t2\t2\nt\t1\t10\n");
}

TEST(Report, H2OfTheIdentityModule) {
  const std::string text = report::h2_report(h2(regular_bimodule(zmod(2)))).render(report::Format::text);
  EXPECT_NE(text.find("H2: order 2, invariant factors [2]\n"), std::string::npos);
  EXPECT_NE(text.find("unit-normalized agrees: yes"), std::string::npos);
}

TEST(Report, ClassesLine) {
  const auto ec = enumerate_extensions(corpus_entry("ex4-z2"), zmod(2), {0, 1});
  const report::Report r = report::classes_report(ec);
  EXPECT_TRUE(r.positive);
  EXPECT_NE(r.render(report::Format::text).find("classes: 2\n"), std::string::npos);
  EXPECT_NE(r.render(report::Format::tsv).find("classes\t2\n"), std::string::npos);
}

TEST(Report, NonRegularEntriesDescribe) {
  const std::string text = report::esystem_report(corpus_entry("ex5-klein")).render(report::Format::text);
  EXPECT_NE(text.find("regular: no"), std::string::npos);
  EXPECT_NO_THROW(report::corpus_report(corpus()));
}
