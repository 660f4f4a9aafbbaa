// Acceptance gate: one line per criterion, exit 0 only when all pass.
// Each criterion drives the library through the bundled suite checks and
// enforces a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "finalg/error.hpp"
#include "finalg/suite.hpp"

namespace {

struct Criterion {
  int num;
  std::string label;
  std::vector<std::string> filters;
  double limit_s;  // 0 = no budget
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "embedded order-4 regression table", {"prop2"}, 1.0},
      {2,
       "pointed roundtrip between product and ternary classes, orders 2-4",
       {"thm20-roundtrip"},
       60.0},
      {3, "ternary iso reduces to binary iso over all order-3 tables",
       {"thm46-iso-reduction"}, 300.0},
      {4, "equal ternaries from non-isomorphic products", {"ex1-pair"}, 1.0},
      {5, "passages between groups, Ward quasigroups and heaps",
       {"thm88-roundtrips"}, 120.0},
      {6, "three-identity presentation of the Ward variety, orders 2-4",
       {"prop75-cor76-ward"}, 120.0},
      {7, "standard-ternary passage and its obstruction",
       {"thm89-91-standard", "ex3-not-standard"}, 120.0},
      {8, "argument-shuffle variants pass and the reference table fails",
       {"thm36-38-pi-variants", "prop39"}, 60.0},
      {9, "closed forms for unit elements against brute force",
       {"thm48-63-units"}, 30.0},
      {10, "twisted products of the 3-element group and its relatives",
       {"z3-alpha-negation", "thm26-28-clifford"}, 1.0},
      {11, "engine-vs-oracle equivalences", {"oracle"}, 0.0},
  };
  return cs;
}

}  // namespace

int main() {
  bool all = true;
  for (const Criterion& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    try {
      for (const std::string& f : c.filters)
        for (const finalg::SuiteResult& r : finalg::run_suite(f))
          if (!r.pass) {
            pass = false;
            detail = r.id + ": " + r.details;
          }
    } catch (const finalg::Error& e) {
      pass = false;
      detail = std::string(e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    std::string budget;
    if (c.limit_s > 0) {
      budget = " (" + std::to_string(secs).substr(0, 5) + "s of " +
               std::to_string(c.limit_s).substr(0, 5) + "s)";
      if (secs >= c.limit_s) {
        pass = false;
        if (detail.empty()) detail = "over time budget";
      }
    }
    all = all && pass;
    std::printf("%s criterion %2d: %s%s%s%s\n", pass ? "PASS" : "FAIL", c.num,
                c.label.c_str(), budget.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
  }
  return all ? 0 : 1;
}
