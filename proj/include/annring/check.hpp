#pragma once

#include <string>
#include <vector>

namespace annring {

// One failing equation with the first tuple (in grid order) where it fails.
struct Failure {
  std::string equation;
  std::string witness;
};

struct CheckReport {
  std::vector<Failure> failures;

  bool ok() const noexcept { return failures.empty(); }
  const Failure* find(const std::string& equation) const {
    for (const auto& f : failures)
      if (f.equation == equation) return &f;
    return nullptr;
  }
};

}  // namespace annring
