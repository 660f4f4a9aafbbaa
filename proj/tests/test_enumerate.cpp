#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "finalg/classify.hpp"
#include "finalg/enumerate.hpp"
#include "finalg/error.hpp"
#include "finalg/format.hpp"

using namespace finalg;

static EnumSpec binary_spec(int order) {
  EnumSpec spec;
  spec.order = order;
  spec.signature = EnumSignature::binary();
  return spec;
}

static std::set<std::string> keys(const std::vector<Structure>& models) {
  std::set<std::string> out;
  for (const Structure& s : models) out.insert(serialize(s));
  return out;
}

TEST_CASE("engine and odometer agree on clause-filtered spaces") {
  struct Case {
    int order;
    std::vector<std::string> clauses;
  };
  const Case cases[] = {
      {2, {"(x*y)*z = x*(y*z)"}},
      {3, {"(x*y)*z = x*(y*z)"}},
      {3, {"(x*y)*z = (z*y)*x"}},
      {2, {"(x*y)*z = (z*y)*x", "x*y = y*x"}},
      {3, {"x*x = x", "x*y = y*x"}},
      {2, {"x*y = y*x => x = y"}},  // Horn premise
  };
  for (const Case& c : cases) {
    EnumSpec spec = binary_spec(c.order);
    for (const std::string& text : c.clauses) spec.with_clause(text);
    auto fast = enumerate_all(spec);
    auto slow = naive_enumerate(spec);
    CHECK_MESSAGE(keys(fast) == keys(slow), "order ", c.order);
  }
}

TEST_CASE("property filters match their clause forms") {
  EnumSpec by_prop = binary_spec(3);
  by_prop.with_prop(Prop::RightModular);
  EnumSpec by_clause = binary_spec(3);
  by_clause.with_clause("(x*y)*z = (z*y)*x");
  CHECK(count_models(by_prop) == count_models(by_clause));

  // cancellation is a built-in, not a clause; compare against the odometer
  EnumSpec quasi = binary_spec(3);
  quasi.with_prop(Prop::LeftCancellative).with_prop(Prop::RightCancellative);
  CHECK(keys(enumerate_all(quasi)) == keys(naive_enumerate(quasi)));
}

TEST_CASE("labelled semigroup counts match the literature") {
  CHECK(count_models(binary_spec(1).with_prop(Prop::AssociativeBinary)) == 1);
  CHECK(count_models(binary_spec(2).with_prop(Prop::AssociativeBinary)) == 8);
  CHECK(count_models(binary_spec(3).with_prop(Prop::AssociativeBinary)) ==
        113);
}

TEST_CASE("groups up to isomorphism through order 4") {
  const std::uint64_t expected[] = {1, 1, 1, 2};
  for (int n = 1; n <= 4; ++n) {
    EnumSpec spec = binary_spec(n);
    spec.with_prop(Prop::AssociativeBinary)
        .with_prop(Prop::TwoSidedIdentity)
        .with_prop(Prop::InverseGroupoid)
        .with_prop(Prop::LeftCancellative)
        .with_prop(Prop::RightCancellative)
        .with_clause("e*x = x")
        .with_clause("x*e = x");
    spec.pins["e"] = 0;
    spec.up_to_iso = true;
    CHECK_MESSAGE(count_models(spec) == expected[n - 1], "order ", n);
  }
}

TEST_CASE("orbit representatives are lexicographically least") {
  EnumSpec spec = binary_spec(3);
  spec.with_clause("x*x = x").with_clause("x*y = y*x");
  spec.up_to_iso = true;
  auto reps = enumerate_all(spec);
  EnumSpec all = spec;
  all.up_to_iso = false;
  auto everything = enumerate_all(all);

  // every model's orbit minimum (by table entries) must be one of the reps,
  // and the models that are their own minimum are exactly the reps
  std::vector<int> p{0, 1, 2};
  std::size_t covered = 0;
  for (const Structure& s : everything) {
    std::vector<int> least;
    std::sort(p.begin(), p.end());
    do {
      std::vector<int> img = relabel(s.op("mul"), p).entries;
      if (least.empty() || img < least) least = img;
    } while (std::next_permutation(p.begin(), p.end()));
    bool is_rep = false;
    for (const Structure& r : reps) is_rep |= r.op("mul").entries == least;
    CHECK(is_rep);
    if (s.op("mul").entries == least) ++covered;
  }
  CHECK(covered == reps.size());
}

TEST_CASE("pinned constants restrict the odometer") {
  // left identity pinned at element 0
  EnumSpec pinned = binary_spec(3);
  pinned.signature.consts.push_back("l");
  pinned.pins["l"] = 0;
  pinned.with_clause("l*x = x");
  pinned.with_clause("(x*y)*z = (z*y)*x");
  std::uint64_t at0 = count_models(pinned);
  CHECK(at0 == 10);

  // unpinned: the same clause set, l ranging over the carrier
  EnumSpec free = binary_spec(3);
  free.signature.consts.push_back("l");
  free.with_clause("l*x = x");
  free.with_clause("(x*y)*z = (z*y)*x");
  CHECK(count_models(free) == 3 * at0);

  // a pin out of range is a precondition error
  EnumSpec bad = binary_spec(3);
  bad.signature.consts.push_back("l");
  bad.pins["l"] = 7;
  CHECK_THROWS_AS(count_models(bad), Error);
}

TEST_CASE("early stop via callback") {
  EnumSpec spec = binary_spec(2);
  int seen = 0;
  enumerate(spec, [&](const Structure&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("ternary signatures enumerate idempotent tables") {
  EnumSpec spec;
  spec.order = 2;
  spec.signature = EnumSignature::ternary();
  spec.with_clause("[x x x] = x");
  // 8 cells, 2 pinned by the law at (0,0,0) and (1,1,1)
  CHECK(count_models(spec) == 64);
  CHECK(keys(enumerate_all(spec)) == keys(naive_enumerate(spec)));
}

TEST_CASE("models are emitted as valid structures") {
  EnumSpec spec = binary_spec(2);
  spec.signature.consts.push_back("e");
  spec.with_clause("e*x = x");
  enumerate(spec, [](const Structure& s) {
    validate(s);
    CHECK(s.consts.count("e") == 1);
    return true;
  });
}

TEST_CASE("odometer refuses oversized spaces") {
  EnumSpec spec = binary_spec(4);  // 4^16 tables
  CHECK_THROWS_AS(naive_enumerate(spec), Error);
  try {
    naive_enumerate(spec);
  } catch (const Error& e) {
    CHECK(e.kind() == "cap-exceeded");
  }
}

TEST_CASE("clauses must fit the signature") {
  EnumSpec spec = binary_spec(2);
  spec.with_clause("[x x x] = x");  // parses, but no ternary op is declared
  CHECK_THROWS_AS(count_models(spec), Error);
}
