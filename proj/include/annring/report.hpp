#pragma once

// Deterministic reports of library results. Text is "key: value" lines with
// indented tables; TSV is one tab-separated row per value or table row,
// led by its key.

#include <optional>
#include <string>
#include <vector>

#include "annring/anncat.hpp"
#include "annring/bimult.hpp"
#include "annring/cohomology.hpp"
#include "annring/corpus.hpp"
#include "annring/extensions.hpp"

namespace annring::report {

enum class Format { text, tsv };

class Report {
 public:
  // Positive unless a check failed or an answer is "no".
  bool positive = true;

  void line(const std::string& key, const std::string& text, std::vector<std::string> tsv = {});
  void table(const std::string& key, std::vector<std::string> header, std::vector<std::vector<std::string>> rows);
  void append(const Report& other, const std::string& prefix);
  std::string render(Format f) const;

 private:
  struct Entry {
    std::string key;
    std::string text;
    std::vector<std::string> tsv;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool is_table = false;
  };
  std::vector<Entry> entries_;
};

std::string list(const std::vector<int>& v);
std::string list(const Vec& v);
std::string group_text(Int order, const Vec& invariant_factors);

Report ring_report(const FiniteRing& r);
Report module_report(const Bimodule& m);
Report esystem_report(const ESystem& es);
Report crossed_report(const CrossedBimodule& xb);
Report section_report(const ESystem& es, const Section& sec);
Report extension_report(const Extension& ext);
Report failure_report(const std::string& what, const std::string& axiom, const std::string& witness);

Report bimult_report(const BimultRing& mb);
Report anncat_check_report(const ESystem& es, const CheckReport& rep);
Report reduce_report(const ESystem& es, const Section& sec, const ReducedAnnCat& rc);
Report h2_report(const H2Result& h);
Report complex_report(const ComplexCheck& c, std::uint64_t seed);
Report obstruction_report(const ObstructionDecision& od);
Report classes_report(const ExtensionClasses& ec);
Report equivalence_report(const std::optional<Equivalence>& eq);
Report search_report(const RawSearch& rs);
Report corpus_report(const std::vector<ESystem>& entries);

}  // namespace annring::report
