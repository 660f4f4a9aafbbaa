#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/clause.hpp"
#include "finalg/construct.hpp"
#include "finalg/error.hpp"
#include "finalg/iso.hpp"
#include "finalg/suite.hpp"

using namespace finalg;

static Structure from_rows(const std::string& name,
                           const std::vector<std::vector<int>>& rows) {
  Structure s;
  s.name = name;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) s.carrier.names.push_back(std::string(1, static_cast<char>('a' + i)));
  OpTable m = OpTable::filled(2, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.cell(x, y) = rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  s.ops["mul"] = m;
  return s;
}

static Structure cyclic(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (x + y) % n;
  return from_rows("z" + std::to_string(n), rows);
}

static bool brute_iso(const Structure& a, const Structure& b) {
  const int n = a.order();
  if (b.order() != n) return false;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  const OpTable& ma = a.op("mul");
  const OpTable& mb = b.op("mul");
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = p[static_cast<std::size_t>(ma.at(x, y))] ==
             mb.at(p[static_cast<std::size_t>(x)], p[static_cast<std::size_t>(y)]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

TEST_CASE("search agrees with brute force on a mixed family") {
  std::vector<Structure> fam;
  fam.push_back(cyclic(3));
  fam.push_back(from_rows("leftzero", {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
  fam.push_back(from_rows("rightzero", {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}));
  fam.push_back(from_rows("const", {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  fam.push_back(from_rows("min", {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}));
  // cyclic(3) relabelled by the 3-cycle 0->1->2->0
  std::vector<int> cyc{1, 2, 0};
  fam.push_back(relabel(cyclic(3), cyc));

  for (const Structure& a : fam)
    for (const Structure& b : fam) {
      IsoTask task = IsoTask::binary(a, b);
      bool found = iso_search(task).has_value();
      CHECK_MESSAGE(found == brute_iso(a, b), a.name, " vs ", b.name);
      if (found) CHECK(verify_morphism(task, *iso_search(task)));
    }
}

TEST_CASE("left-zero and right-zero bands are not isomorphic") {
  Structure a = from_rows("leftzero", {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  Structure b = from_rows("rightzero", {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  CHECK_FALSE(iso_search(IsoTask::binary(a, b)).has_value());
}

TEST_CASE("first certificate is lexicographically least") {
  Structure g = cyclic(3);
  auto delta = iso_search(IsoTask::binary(g, g));
  REQUIRE(delta.has_value());
  // identity beats the negation automorphism
  CHECK(delta->forward == std::vector<int>{0, 1, 2});
}

TEST_CASE("cyclic and klein four-groups are distinguished") {
  Structure z4 = cyclic(4);
  Structure klein = from_rows(
      "v4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK_FALSE(iso_search(IsoTask::binary(z4, klein)).has_value());
  CHECK(iso_search(IsoTask::binary(klein, klein)).has_value());
}

TEST_CASE("bijection inverse and rendering") {
  Structure g = cyclic(3);
  std::vector<int> perm{2, 0, 1};
  Structure h = relabel(g, perm);
  IsoTask task = IsoTask::binary(g, h);
  auto delta = iso_search(task);
  REQUIRE(delta.has_value());
  std::vector<int> inv = delta->inverse();
  for (int i = 0; i < 3; ++i)
    CHECK(inv[static_cast<std::size_t>(delta->forward[static_cast<std::size_t>(
              i)])] == i);
  std::string text = delta->render(g.carrier, h.carrier);
  CHECK(text.find("->") != std::string::npos);
  CHECK(text.find(g.carrier.names[0]) != std::string::npos);
}

TEST_CASE("ternary tasks compare ternary tables") {
  Structure g = cyclic(3);
  Structure a;
  a.name = "ta";
  a.carrier = g.carrier;
  a.ops["t"] = natural_ternary(g);
  std::vector<int> cyc{1, 2, 0};
  Structure b = relabel(a, cyc);
  CHECK(iso_search(IsoTask::ternary(a, b)).has_value());

  Structure proj = corpus_ex4();
  CHECK_FALSE(iso_search(IsoTask::ternary(a, proj)).has_value());
}

TEST_CASE("searches reject missing or mismatched ops") {
  Structure g = cyclic(3);
  Structure proj = corpus_ex4();
  CHECK_THROWS_AS(iso_search(IsoTask::binary(g, proj)), Error);

  Structure both = g;
  both.ops["t"] = natural_ternary(g);
  IsoTask crossed{&both, &both, {{"mul", "t"}}};
  try {
    iso_search(crossed);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == "arity-mismatch");
  }
}

TEST_CASE("automorphism groups of small groups") {
  CHECK(automorphisms(cyclic(4), {"mul"}).size() == 2);
  CHECK(automorphisms(cyclic(5), {"mul"}).size() == 4);
  Structure klein = from_rows(
      "v4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(automorphisms(klein, {"mul"}).size() == 6);
}

TEST_CASE("constraint clause filters candidate maps") {
  Structure g = cyclic(4);
  // the candidate map is bound to ': x' = x keeps only the identity
  Clause fix = parse_clause("x' = x");
  auto fixed = automorphisms(g, {"mul"}, fix);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0].forward == std::vector<int>{0, 1, 2, 3});

  // both automorphisms of z4 are involutions
  Clause invo = parse_clause("x'' = x");
  CHECK(automorphisms(g, {"mul"}, invo).size() == 2);
}
