#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "finalg/classify.hpp"
#include "finalg/construct.hpp"
#include "finalg/error.hpp"
#include "finalg/format.hpp"
#include "finalg/inverse.hpp"
#include "finalg/suite.hpp"

using namespace finalg;

static Structure cyclic(int n) {
  Structure s;
  s.name = "z" + std::to_string(n);
  for (int i = 0; i < n; ++i) s.carrier.names.push_back("g" + std::to_string(i));
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = (x + y) % n;
  s.ops["mul"] = m;
  return s;
}

// two-element semilattice: min under 0 < 1
static Structure meet2() {
  Structure s;
  s.name = "meet2";
  s.carrier.names = {"a", "b"};
  OpTable m = OpTable::filled(2, 2);
  m.cell(1, 1) = 1;
  s.ops["mul"] = m;
  return s;
}

TEST_CASE("inverse certificate of a group is the group inverse") {
  Structure g = cyclic(4);
  InverseCert cert = inverse_cert(g);
  for (int x = 0; x < 4; ++x) CHECK(cert.inv[static_cast<std::size_t>(x)] ==
                                    (4 - x) % 4);
  CHECK(cert.idempotents == std::vector<int>{0});
}

TEST_CASE("inverse certificate rejects ambiguous elements") {
  // left-zero: every b satisfies (ab)a = a, inverses are not unique
  Structure s;
  s.carrier.names = {"a", "b"};
  OpTable m = OpTable::filled(2, 2);
  m.cell(0, 0) = 0;
  m.cell(0, 1) = 0;
  m.cell(1, 0) = 1;
  m.cell(1, 1) = 1;
  s.ops["mul"] = m;
  try {
    inverse_cert(s);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "not-inverse");
  }
}

TEST_CASE("certificate serialization lists idempotents") {
  Structure m = meet2();
  InverseCert cert = inverse_cert(m);
  std::string text = serialize_cert(m, cert);
  CHECK(text.find("op inv") != std::string::npos);
  CHECK(text.find("a b") != std::string::npos);  // both idempotent
}

TEST_CASE("standard ternary of an inverse semigroup") {
  Structure g = cyclic(3);
  OpTable t = standard_ternary(g);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        CHECK(t.at(a, b, c) == ((a - b + c) % 3 + 3) % 3);

  Structure wrapped = g;
  wrapped.ops["t"] = t;
  CHECK(check_property(wrapped, Prop::GeneralisedHeap).holds);
}

TEST_CASE("standard ternary requires associativity") {
  CHECK_THROWS_AS(standard_ternary(corpus_prop39()), Error);
}

TEST_CASE("inverse semigroup recognizer") {
  std::string why;
  CHECK(is_inverse_semigroup(cyclic(4)));
  CHECK(is_inverse_semigroup(meet2()));
  CHECK_FALSE(is_inverse_semigroup(corpus_prop2(), &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("clifford decomposition of a group is one component") {
  CliffordDecomposition dec = clifford_decompose(cyclic(6));
  CHECK(dec.groups.size() == 1);
  CHECK(dec.groups.begin()->second.order() == 6);
  for (int x = 0; x < 6; ++x) CHECK(dec.component_of[static_cast<std::size_t>(
                                        x)] == 0);
}

TEST_CASE("clifford decomposition of a semilattice is all-trivial") {
  CliffordDecomposition dec = clifford_decompose(meet2());
  CHECK(dec.groups.size() == 2);
  for (const auto& [e, g] : dec.groups) CHECK(g.order() == 1);
}

TEST_CASE("clifford rejects non-central idempotents") {
  // left-zero on 2 elements is a semigroup with non-commuting idempotents
  Structure s;
  s.carrier.names = {"a", "b"};
  OpTable m = OpTable::filled(2, 2);
  m.cell(0, 0) = 0;
  m.cell(0, 1) = 0;
  m.cell(1, 0) = 1;
  m.cell(1, 1) = 1;
  s.ops["mul"] = m;
  CHECK_THROWS_AS(clifford_decompose(s), Error);
}

TEST_CASE("twisted product by negation turns addition into subtraction") {
  Structure g = cyclic(3);
  OpTable neg = OpTable::filled(1, 3);
  for (int x = 0; x < 3; ++x) neg.cell(x) = (3 - x) % 3;
  Structure tw = alpha_determined(g, neg);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(tw.op("mul").at(x, y) == ((y - x) % 3 + 3) % 3);
  CHECK(check_property(tw, Prop::RightModular).holds);
}

TEST_CASE("twist must be an involutive idempotent-fixed automorphism") {
  Structure g = cyclic(4);
  OpTable not_auto = OpTable::filled(1, 4);
  not_auto.cell(0) = 1;
  not_auto.cell(1) = 0;
  CHECK_THROWS_AS(alpha_determined(g, not_auto), Error);

  std::vector<OpTable> ok = admissible_automorphisms(g, "mul");
  // identity and negation
  CHECK(ok.size() == 2);
}

TEST_CASE("generalised heap to inverse semigroup and back") {
  Structure g = cyclic(3);
  Structure bundle = g;
  bundle.ops["t"] = standard_ternary(g);
  OpTable inv = group_inverses(g);
  bundle.ops["inv"] = inv;
  OpTable hat = OpTable::filled(1, 3);
  for (int x = 0; x < 3; ++x) hat.cell(x) = 0;  // x^ = x x^-1 = identity
  bundle.ops["hat"] = hat;
  bundle.ops.erase("mul");

  Structure back = gh_to_inverse_semigroup(bundle);
  CHECK(back.op("mul") == g.op("mul"));
}

TEST_CASE("product recovery from an iterated-product ternary") {
  Structure g = cyclic(3);
  Structure bundle;
  bundle.name = "z3.nat";
  bundle.carrier = g.carrier;
  bundle.ops["t"] = natural_ternary(g);
  bundle.ops["inv"] = group_inverses(g);
  OpTable hat = OpTable::filled(1, 3);
  bundle.ops["hat"] = hat;  // x^ = identity element

  Structure back = natural_ternary_inverse_check(bundle);
  CHECK(back.op("mul") == g.op("mul"));
}

TEST_CASE("iterated-product recovery rejects a projection ternary") {
  Structure bad = corpus_ex4();
  OpTable ident = OpTable::filled(1, bad.order());
  for (int x = 0; x < bad.order(); ++x) ident.cell(x) = x;
  bad.ops["inv"] = ident;
  bad.ops["hat"] = ident;
  CHECK_THROWS_AS(natural_ternary_inverse_check(bad), Error);
}

TEST_CASE("bridge identities are actually required") {
  Structure bad = corpus_ex3();
  OpTable ident = OpTable::filled(1, 3);
  for (int x = 0; x < 3; ++x) ident.cell(x) = x;
  bad.ops["inv"] = ident;
  bad.ops["hat"] = ident;
  CHECK_THROWS_AS(gh_to_inverse_semigroup(bad), Error);
}
