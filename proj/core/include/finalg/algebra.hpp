#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finalg/error.hpp"

namespace finalg {

// Ternary tables above this order would not fit the desk-scale budget.
inline constexpr int kMaxTernaryOrder = 64;

// Carrier: element names in index order. Indices are the internal currency;
// names appear only at the I/O boundary.
struct Carrier {
  std::vector<std::string> names;

  int order() const { return static_cast<int>(names.size()); }

  std::optional<int> index_of(std::string_view token) const {
    for (int i = 0; i < order(); ++i)
      if (names[i] == token) return i;
    return std::nullopt;
  }

  const std::string& name_of(int i) const;

  bool operator==(const Carrier&) const = default;
};

// Dense operation table over indices 0..order-1.
// arity 1: entries[a]; arity 2: entries[a*n+b]; arity 3: entries[(a*n+b)*n+c].
struct OpTable {
  int arity = 2;
  int order = 0;
  std::vector<int> entries;

  static OpTable filled(int arity, int order, int value = 0);

  std::size_t cells() const { return entries.size(); }

  int at(int a) const { return entries[static_cast<std::size_t>(a)]; }
  int at(int a, int b) const {
    return entries[static_cast<std::size_t>(a) * order + b];
  }
  int at(int a, int b, int c) const {
    return entries[(static_cast<std::size_t>(a) * order + b) * order + c];
  }

  int& cell(int a) { return entries[static_cast<std::size_t>(a)]; }
  int& cell(int a, int b) {
    return entries[static_cast<std::size_t>(a) * order + b];
  }
  int& cell(int a, int b, int c) {
    return entries[(static_cast<std::size_t>(a) * order + b) * order + c];
  }

  bool operator==(const OpTable&) const = default;
  auto operator<=>(const OpTable&) const = default;
};

// A named finite structure: carrier + ops + distinguished constants.
// Plain value type; ops and consts are kept name-sorted so the canonical
// serialization falls out of iteration order.
struct Structure {
  std::string name;
  Carrier carrier;
  std::map<std::string, OpTable> ops;
  std::map<std::string, int> consts;

  int order() const { return carrier.order(); }

  const OpTable* find_op(const std::string& op) const {
    auto it = ops.find(op);
    return it == ops.end() ? nullptr : &it->second;
  }
  const OpTable& op(const std::string& op) const;

  bool has_const(const std::string& name) const {
    return consts.count(name) != 0;
  }
  int constant(const std::string& name) const;

  bool operator==(const Structure&) const = default;
};

// Throws on malformed data: wrong entry counts, out-of-range cells or
// constants, duplicate element names, ternary tables beyond the order cap.
void validate(const Structure& s);

// Applies s.op(op) to args; checks arity and index range.
int eval(const Structure& s, const std::string& op, std::span<const int> args);

// New top element acting as a two-sided identity for `mul`; old products and
// constants unchanged. Only the designated binary op is carried over (other
// ops have no canonical extension). The new element gets token "1" (primed
// until distinct) and is also recorded as constant "1".
Structure adjoin_identity(const Structure& s, const std::string& mul = "mul");

// Relabeling along perm (perm[old] = new): table[perm(a),perm(b)] =
// perm(old[a,b]), constants mapped, names permuted.
OpTable relabel(const OpTable& t, std::span<const int> perm);
Structure relabel(const Structure& s, std::span<const int> perm);

// Convenience carrier for machine-generated structures: a, b, ... then e10,
// e11, ... past 26 elements.
Carrier default_carrier(int order);

}  // namespace finalg
