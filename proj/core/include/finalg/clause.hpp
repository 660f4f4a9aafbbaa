#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

// Horn clause language over one binary symbol '*', one ternary symbol
// "[t1 t2 t3]", two unary postfix symbols ' and ^, variables x y z u v w q
// (exactly these; every other identifier is a constant):
//
//   clause := [eq ("&" eq)* "=>"] eq
//   eq     := term "=" term
//   term   := factor ("*" factor)*          (left-associative)
//   factor := atom postfix*
//   atom   := var | const | "[" term term term "]" | "(" term ")"

inline constexpr std::array<char, 7> kClauseVars = {'x', 'y', 'z', 'u',
                                                    'v', 'w', 'q'};
inline constexpr int kNumClauseVars = 7;

struct Term {
  enum class Kind { Var, Const, Apply };
  Kind kind = Kind::Var;
  int var = -1;          // Kind::Var: 0..6
  std::string constant;  // Kind::Const
  std::string symbol;    // Kind::Apply: "*", "[]", "'", "^"
  std::vector<Term> args;

  static Term make_var(int v);
  static Term make_const(std::string name);
  static Term apply(std::string symbol, std::vector<Term> args);
};

struct Equation {
  Term lhs, rhs;
};

struct Clause {
  std::vector<Equation> premises;
  Equation conclusion;
  std::string text;  // original source, kept for reports

  int var_mask() const;  // bit i set when kClauseVars[i] occurs
  std::vector<std::string> constants() const;
};

Clause parse_clause(std::string_view text);

// ".clauses" catalog: one clause per line, "name: clause". '#' comments and
// blank lines allowed.
std::vector<std::pair<std::string, Clause>> parse_clause_catalog(
    std::string_view text);

// Maps clause symbols to op names in a structure, and clause constant tokens
// to structure constant names (identity when absent from `consts`).
struct Binding {
  std::string mul = "mul";    // symbol '*'
  std::string ternary = "t";  // symbol "[...]"
  std::string prime = "inv";  // postfix '
  std::string hat = "hat";    // postfix ^
  std::map<std::string, std::string> consts;

  const std::string& op_for(const std::string& symbol) const;
  std::string resolve_const(const std::string& token) const;
};

// Assignment of elements to the clause variables; -1 marks unused slots.
struct Assignment {
  std::array<int, kNumClauseVars> values{-1, -1, -1, -1, -1, -1, -1};

  std::string render(const Carrier& carrier) const;
  bool operator==(const Assignment&) const = default;
};

struct CheckResult {
  bool holds = false;
  std::optional<Assignment> counterexample;
};

// Universally quantifies the clause over the carrier. On failure reports the
// lexicographically first violating assignment (variables in x..q order, x
// varying slowest; only variables that occur participate).
CheckResult check_clause(const Structure& s, const Clause& c,
                         const Binding& binding = {});

CheckResult check_clause(const Structure& s, std::string_view clause_text,
                         const Binding& binding = {});

}  // namespace finalg
