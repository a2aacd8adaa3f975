#pragma once

/**
 * @file report.hpp
 * @brief Tiny pass/fail check records shared by the verification runners.
 *
 * Every higher-level verification (transport, dual bases, mutation chains,
 * torsion pairs, ...) reports its findings as a flat list of named checks
 * with printable left/right hand sides, so the CLI can serialize them
 * uniformly and the test suite can assert on them.
 */

#include <string>
#include <vector>

namespace orbik {

struct Check {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace orbik
