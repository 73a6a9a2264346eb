#pragma once

// Property suites behind the shell's `check` command. They sweep small
// exhaustive ranges over the session's generators so a check finishes in well
// under a second.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "flagcycles/word.hpp"

namespace flagcycles {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// involution, laws, trees, assoc, monoid, homology, oracle
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const Generators& gens);

std::string to_string(const SuiteResult& result);

}  // namespace flagcycles
