#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/clause.hpp"

namespace finalg {

struct Bijection {
  std::vector<int> forward;  // forward[left index] = right index

  std::vector<int> inverse() const;
  std::string render(const Carrier& left, const Carrier& right) const;
  bool operator==(const Bijection&) const = default;
};

// Isomorphism task: pairs of op names that must correspond (equal arities).
struct IsoTask {
  const Structure* left = nullptr;
  const Structure* right = nullptr;
  std::vector<std::pair<std::string, std::string>> op_pairs;

  static IsoTask binary(const Structure& a, const Structure& b,
                        const std::string& mul = "mul");
  static IsoTask ternary(const Structure& a, const Structure& b,
                         const std::string& t = "t");
};

// True when delta maps every table of the task entrywise onto its partner.
bool verify_morphism(const IsoTask& task, const Bijection& delta);

// Backtracking search with invariant pruning (per-element invariant vectors:
// idempotency flags, row/column multiplicity profiles, fixed-point counts).
// Domain elements are assigned in index order and images tried in increasing
// index, so the first hit is the lexicographically least certificate; it is
// re-verified entrywise before being returned. nullopt only after exhaustion.
std::optional<Bijection> iso_search(const IsoTask& task);

// All automorphisms w.r.t. the listed ops, lexicographic order. When a
// constraint clause is given, it is checked with the candidate map bound to
// the ' symbol (e.g. "(x')*y = (y')*x"), and only satisfying maps are kept.
std::vector<Bijection> automorphisms(
    const Structure& s, const std::vector<std::string>& op_names,
    const std::optional<Clause>& constraint = std::nullopt,
    const Binding& binding = {});

}  // namespace finalg
