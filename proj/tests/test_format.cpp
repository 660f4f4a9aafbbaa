#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"
#include "finalg/format.hpp"
#include "finalg/suite.hpp"

using namespace finalg;

static bool kind_is(const Error& e, const char* kind) {
  return e.kind() == kind;
}

TEST_CASE("parse: reference table round trip") {
  const Structure& p2 = corpus_prop2();
  CHECK(p2.order() == 4);
  CHECK(p2.ops.size() == 1);
  CHECK(p2.op("mul").arity == 2);

  std::string text = serialize(p2);
  std::vector<Structure> back = parse_structures(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0] == p2);
  CHECK(serialize(back[0]) == text);  // idempotent on own output
}

TEST_CASE("parse: order-1 structure") {
  auto parsed = parse_structures(
      "structure tiny\nelements a\nop mul arity 2\na\nend\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].order() == 1);
  CHECK(parsed[0].op("mul").at(0, 0) == 0);
}

TEST_CASE("parse: comments and whitespace are free") {
  auto parsed = parse_structures(
      "# file comment\nstructure t # trailing\nelements a b\n"
      "op mul arity 2\n  a a   # row\n b b\nend\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].op("mul").at(1, 0) == 1);
}

TEST_CASE("parse: ragged table is a hard error") {
  CHECK_THROWS_WITH_AS(
      parse_structures("structure t\nelements a b c d\nop mul arity 2\n"
                       "a a a a\nb b b b\nc c c c\nend\n"),
      doctest::Contains("table"), Error);
}

TEST_CASE("parse: duplicate element name") {
  try {
    parse_structures("structure t\nelements a a\nop mul arity 2\n"
                     "a a\na a\nend\n");
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(kind_is(e, "duplicate-element"));
  }
}

TEST_CASE("parse: undeclared element in a cell") {
  try {
    parse_structures("structure t\nelements a b\nop mul arity 2\n"
                     "a q\nb a\nend\n");
    FAIL("no error thrown");
  } catch (const Error& e) {
    CHECK(kind_is(e, "undeclared-element"));
  }
}

TEST_CASE("parse: arity-3 blocks") {
  const Structure& e3 = corpus_ex3();
  CHECK(e3.op("t").arity == 3);
  std::string text = serialize(e3);
  auto back = parse_structures(text);
  REQUIRE(back.size() == 1);
  CHECK(back[0].op("t") == e3.op("t"));
}

TEST_CASE("selector: fragment resolution") {
  std::vector<Structure> two =
      parse_structures(serialize(corpus_prop2()) + serialize(corpus_prop39()));
  REQUIRE(two.size() == 2);
  CHECK(select_structure(two, "prop39", "mem").name == "prop39");
  CHECK_THROWS_AS(select_structure(two, "", "mem"), Error);     // ambiguous
  CHECK_THROWS_AS(select_structure(two, "nope", "mem"), Error); // missing
  std::vector<Structure> one = {corpus_prop2()};
  CHECK(select_structure(one, "", "mem").name == "prop2");  // sole structure
}

TEST_CASE("validate: out-of-range cell is rejected") {
  Structure s;
  s.name = "bad";
  s.carrier.names = {"a", "b"};
  s.ops["mul"] = OpTable::filled(2, 2);
  s.ops["mul"].cell(0, 0) = 7;
  CHECK_THROWS_AS(validate(s), Error);
}

TEST_CASE("adjoin identity: left zero table") {
  Structure s;
  s.name = "lz";
  s.carrier.names = {"a", "b"};
  s.ops["mul"] = OpTable::filled(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) s.ops["mul"].cell(x, y) = x;

  Structure m = adjoin_identity(s);
  CHECK(m.order() == 3);
  int one = m.constant("1");
  const OpTable& t = m.op("mul");
  for (int x = 0; x < 3; ++x) {
    CHECK(t.at(one, x) == x);
    CHECK(t.at(x, one) == x);
  }
  // old products unchanged
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(t.at(x, y) == x);
  // the new element is the only two-sided identity
  for (int e = 0; e < 3; ++e) {
    bool ident = true;
    for (int x = 0; x < 3; ++x)
      if (t.at(e, x) != x || t.at(x, e) != x) ident = false;
    CHECK(ident == (e == one));
  }
}

TEST_CASE("adjoin identity: reference table gains a unit") {
  Structure m = adjoin_identity(corpus_prop2());
  CHECK(m.order() == 5);
  int one = m.constant("1");
  for (int x = 0; x < 5; ++x) {
    CHECK(eval(m, "mul", std::vector<int>{one, x}) == x);
    CHECK(eval(m, "mul", std::vector<int>{x, one}) == x);
  }
}

TEST_CASE("adjoin identity: token collision gets primed") {
  Structure s;
  s.name = "clash";
  s.carrier.names = {"1"};
  s.ops["mul"] = OpTable::filled(2, 1);
  Structure m = adjoin_identity(s);
  CHECK(m.order() == 2);
  CHECK(m.carrier.names[1] == "1'");  // primed until distinct
  CHECK(m.constant("1") == 1);        // constant still named "1"
}

TEST_CASE("eval: arity and range checks") {
  const Structure& p2 = corpus_prop2();
  CHECK(eval(p2, "mul", std::vector<int>{0, 1}) == p2.op("mul").at(0, 1));
  CHECK_THROWS_AS(eval(p2, "mul", std::vector<int>{0}), Error);
  CHECK_THROWS_AS(eval(p2, "mul", std::vector<int>{0, 9}), Error);
  CHECK_THROWS_AS(eval(p2, "nosuch", std::vector<int>{0, 0}), Error);
}
