#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finalg/classify.hpp"
#include "finalg/clause.hpp"

namespace finalg {

// Model enumeration: depth-first search over table cells in lexicographic
// order with clause propagation. A clause instance is tested as soon as all
// cells it needs are assigned (watched-cell scheme); left/right cancellation
// prunes monotonically during the search; non-monotone built-ins run on
// complete tables. With up_to_iso only models that are the lexicographically
// least member of their relabeling orbit are emitted (constants compared
// before tables, so pinned constants stay pinned).
struct EnumSignature {
  struct OpSpec {
    std::string name;
    int arity = 2;
  };
  std::vector<OpSpec> ops;
  // Declared constants: pinned ones are fixed, the rest range over the
  // carrier in an outer odometer (declaration order, leftmost slowest).
  std::vector<std::string> consts;

  static EnumSignature binary();             // op "mul"
  static EnumSignature ternary();            // op "t"
  static EnumSignature binary_unary();       // "mul" + "inv"
  static EnumSignature ternary_two_unary();  // "t" + "inv" + "hat"
};

struct EnumSpec {
  int order = 0;
  EnumSignature signature;
  std::vector<Clause> clauses;
  std::vector<Prop> props;
  std::map<std::string, int> pins;
  bool up_to_iso = false;

  EnumSpec& with_clause(std::string_view text);
  EnumSpec& with_prop(Prop p);
};

// Return false to stop the enumeration early.
using ModelCallback = std::function<bool(const Structure&)>;

void enumerate(const EnumSpec& spec, const ModelCallback& on_model);
std::vector<Structure> enumerate_all(const EnumSpec& spec);
std::uint64_t count_models(const EnumSpec& spec);

// Test oracle: odometer over the whole assignment space, filtering each
// complete table through check_property / check_clause. Guarded by a space
// cap ("cap-exceeded" beyond ~1e7 assignments). Deliberately shares no
// search machinery with enumerate().
std::vector<Structure> naive_enumerate(const EnumSpec& spec,
                                       std::uint64_t space_cap = 10'000'000);

}  // namespace finalg
