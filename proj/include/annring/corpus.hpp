#pragma once

// The built-in set of validated E-systems used by the CLI and the tests.

#include <string>
#include <vector>

#include "annring/crossed.hpp"

namespace annring {

// Ideal inclusions, bimodules with d = 0, the d(b) = 2b instance and two
// inner-bimultiplication maps B -> M_B. All regular except "ex5-klein".
std::vector<ESystem> corpus();
ESystem corpus_entry(const std::string& name);  // throws Error if unknown

// The ring S as an R-bimodule through h: R -> S.
Bimodule bimodule_via(const RingPtr& r, const RingPtr& s, const std::vector<int>& h);

}  // namespace annring
