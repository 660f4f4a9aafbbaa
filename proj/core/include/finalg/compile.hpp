#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "finalg/clause.hpp"

namespace finalg {

// Shared clause evaluation core. Clauses compile to flat postfix programs
// over a set of table slots; the same programs run against complete tables
// (check_clause) and against partially filled tables inside the enumerator,
// where entry -1 means "not assigned yet" and evaluation reports the first
// blocking cell.

struct TableRef {
  const int* entries = nullptr;
  int order = 0;
  int arity = 0;
  int base = 0;  // global cell id of entries[0]
};

struct Prog {
  struct Ins {
    std::int8_t op;  // 0 push var, 1 push const slot, 2 apply
    std::int16_t slot;  // apply: table slot; push const: const slot
    std::int8_t payload;  // push var: var index; apply: arity
  };
  std::vector<Ins> code;
};

struct CompiledEq {
  Prog lhs, rhs;
};

struct CompiledClause {
  std::vector<CompiledEq> premises;
  CompiledEq conclusion;
  int var_mask = 0;
};

// Resolution environment handed to the compiler: slot lookup by (op symbol)
// and constant slot lookup by clause constant token.
struct CompileHooks {
  // Returns table slot for a clause symbol ("*", "[]", "'", "^"); throws
  // finalg::Error on unbound symbols.
  std::int16_t (*op_slot)(void* ctx, const std::string& symbol) = nullptr;
  std::int16_t (*const_slot)(void* ctx, const std::string& token) = nullptr;
  void* ctx = nullptr;
};

CompiledClause compile_clause(const Clause& c, const CompileHooks& hooks);

enum class Tri { Violated, Satisfied, Pending };

struct EvalEnv {
  std::span<const TableRef> tables;  // indexed by slot
  std::span<const int> const_values;
  const int* vars = nullptr;  // kNumClauseVars entries
};

// -1 when some needed cell is unassigned; first such global cell id is
// recorded in blocked (untouched otherwise).
int eval_prog(const Prog& p, const EvalEnv& env, int& blocked);

// Semantics: Satisfied when some premise is decidedly false or the conclusion
// is decidedly true; Violated when all premises are decidedly true and the
// conclusion decidedly false; Pending otherwise (blocked = first unknown
// cell seen).
Tri eval_instance(const CompiledClause& c, const EvalEnv& env, int& blocked);

}  // namespace finalg
