#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finalg/clause.hpp"

namespace finalg {

// Property catalog. Tokens are stable CLI names.
enum class Prop {
  RightModular,
  LeftLateral,
  WeaklyAssociative,
  AgStar,
  AgStarStar,
  Medial,
  Paramedial,
  Reversible,
  Commutative,
  AssociativeBinary,
  IdempotentBinary,
  LeftIdentity,
  RightIdentity,
  TwoSidedIdentity,
  GloballyIdempotent,
  WeaklyReductive,
  LeftCancellative,
  RightCancellative,
  RightSolvable,
  WardGroupoid,
  WardQuasigroup,
  InverseGroupoid,
  StarUnary,
  Semiheap,
  LaterallyCommutative,
  LeftCommutative,
  RightCommutative,
  AssociativeTernary,
  IdempotentTernary,
  NearHeap,
  GeneralisedHeap,
  Heap,
  LeftUnital,
  RightUnital,
  BiUnital,
  LateralUnit,
  OuterLateralUnit,
  Unit,
  LeftLConsistent,
  CentralCommutant,
  StarCongruent,
  OuterLateral,
};

// Which tables a property consumes.
struct PropNeeds {
  bool mul = false;
  bool ternary = false;
  bool prime = false;
  // Constant 'l': Pinned = use the bound constant when present, otherwise
  // fall back to an existential search over elements.
  bool uses_l = false;
};

struct PropertyInfo {
  Prop id;
  std::string token;
  PropNeeds needs;
  // Identity-backed part: clause texts with 'l' as the distinguished
  // constant. Empty for purely built-in checks.
  std::vector<std::string> clause_texts;
  bool builtin = false;  // has a non-clause component
};

const std::vector<PropertyInfo>& property_catalog();
const PropertyInfo& property_info(Prop p);
std::optional<Prop> prop_from_token(std::string_view token);

struct PropertyReport {
  Prop prop;
  bool holds = false;
  // Existential properties: smallest-index witness on success.
  std::optional<int> witness;
  // Identity-backed failures: lexicographically first counterexample of the
  // first failing clause, plus that clause's text.
  std::optional<Assignment> counterexample;
  std::string failed_clause;
  std::string detail;  // built-in failure descriptions
};

// Throws Error("missing-binding", ...) when the structure lacks a table the
// property needs under the given binding.
PropertyReport check_property(const Structure& s, Prop p,
                              const Binding& binding = {});

// Every catalog property that holds, given the binding; properties whose
// required tables are absent are skipped. Sorted by token.
std::vector<Prop> classify(const Structure& s, const Binding& binding = {});

// Element roles, brute-forced; results in increasing index order.
enum class Role {
  LeftIdentity,
  RightIdentity,
  Idempotent,
  LeftUnital,
  RightUnital,
  BiUnital,
  LateralUnit,
  OuterLateralUnit,
  Unit,
};
std::optional<Role> role_from_token(std::string_view token);
const std::vector<std::pair<std::string, Role>>& role_catalog();
std::vector<int> find_elements(const Structure& s, Role role,
                               const Binding& binding = {});

// For a right modular groupoid with a left identity l: compares the
// brute-forced lateral-unit and outer-lateral-unit sets of the natural
// ternary [S] and the star ternary [S]' (with x' = x*l) against their
// closed-form descriptions:
//   lateral units of [S]    = { m : (ml)m = l }  when x = xl for all x,
//                             empty otherwise; equivalently l = m^2
//   lateral units of [S]'   = { m : (ml)m = l } = { m : ((ml)m)l = l }
//                             = { m : m = m(mm) and l = (mm)(mm) }
//   outer lateral of [S]    = { m : l = (mm)(mm) }
//   outer lateral of [S]'   = { m : l = ((ml)m)(m(ml)) }
struct UnitCharReport {
  bool ok = false;
  std::string detail;
};
UnitCharReport check_unit_characterizations(const Structure& s,
                                            const std::string& mul = "mul");

}  // namespace finalg
