#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "finalg/error.hpp"
#include "finalg/format.hpp"
#include "finalg/suite.hpp"

using namespace finalg;

TEST_CASE("check ids are unique, stable tokens") {
  std::set<std::string> ids;
  for (const SuiteCheck& c : suite_checks()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.description.empty());
    for (char ch : c.id) {
      bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
                ch == '-';
      CHECK_MESSAGE(ok, c.id);
    }
  }
  CHECK(ids.size() >= 50);
  CHECK(ids.count("prop2") == 1);
  CHECK(ids.count("thm20-roundtrip") == 1);
}

TEST_CASE("prefix filter selects a subset") {
  auto all = run_suite("");
  auto some = run_suite("thm36");
  CHECK(all.size() > some.size());
  CHECK_FALSE(some.empty());
  for (const SuiteResult& r : some) CHECK(r.id.substr(0, 5) == "thm36");
}

TEST_CASE("unknown filters are an error, not an empty pass") {
  try {
    run_suite("no-such-check");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "unknown-filter");
  }
}

TEST_CASE("single fast checks pass with details") {
  for (const char* id : {"prop2", "prop39", "ex2", "z3-subtraction-facts"}) {
    auto rs = run_suite(id);
    REQUIRE_FALSE(rs.empty());
    CHECK_MESSAGE(rs[0].pass, rs[0].id, ": ", rs[0].details);
    CHECK_FALSE(rs[0].details.empty());
  }
}

TEST_CASE("outcomes are deterministic") {
  auto a = run_suite("prop1");
  auto b = run_suite("prop1");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].details == b[i].details);
  }
}

TEST_CASE("embedded corpus matches the files on disk") {
  for (const auto& [stem, text] : corpus_texts()) {
    std::ifstream in(std::string(FINALG_CORPUS_DIR) + "/" + stem + ".alg",
                     std::ios::binary);
    REQUIRE_MESSAGE(in.good(), stem);
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(buf.str() == text, stem, ".alg drifted from the embedded "
                                           "copy");
  }
}

TEST_CASE("embedded tables parse back to the accessors") {
  for (const auto& [stem, text] : corpus_texts()) {
    auto parsed = parse_structures(text);
    REQUIRE_FALSE(parsed.empty());
    validate(parsed[0]);
  }
  CHECK(corpus_prop2().order() == 4);
  CHECK(corpus_prop39().order() == 4);
  CHECK(corpus_ex2().order() == 3);
  CHECK(corpus_ex3().order() == 3);
  CHECK(corpus_ex4().order() == 3);
  CHECK(corpus_prop39().consts.at("l") == 3);
}
