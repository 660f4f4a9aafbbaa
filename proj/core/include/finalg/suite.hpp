#pragma once

#include <functional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Built-in regression checks over the bundled reference tables and small
// enumerated model classes. Every check is deterministic; ids are stable
// CLI tokens.
struct CheckOutcome {
  bool pass = false;
  std::string details;
};

struct SuiteCheck {
  std::string id;
  std::string description;
  std::function<CheckOutcome()> run;
};

const std::vector<SuiteCheck>& suite_checks();

struct SuiteResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string details;
};

// Runs checks whose id starts with filter_prefix (all when empty). Throws
// Error("unknown-filter", ...) when the prefix matches nothing.
std::vector<SuiteResult> run_suite(std::string_view filter_prefix = "");

// Reference tables compiled in (identical to the corpus files on disk).
const Structure& corpus_prop2();
const Structure& corpus_prop39();
const Structure& corpus_ex2();
const Structure& corpus_ex3();
const Structure& corpus_ex4();
// Raw text of the embedded corpus, keyed by file stem ("prop2", ...).
const std::vector<std::pair<std::string, std::string>>& corpus_texts();

}  // namespace finalg
