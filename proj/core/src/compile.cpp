#include "finalg/compile.hpp"

#include "finalg/error.hpp"

namespace finalg {

namespace {

void compile_term(const Term& t, const CompileHooks& hooks, Prog& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      out.code.push_back(
          Prog::Ins{0, 0, static_cast<std::int8_t>(t.var)});
      return;
    case Term::Kind::Const:
      out.code.push_back(
          Prog::Ins{1, hooks.const_slot(hooks.ctx, t.constant), 0});
      return;
    case Term::Kind::Apply: {
      for (const Term& a : t.args) compile_term(a, hooks, out);
      out.code.push_back(Prog::Ins{2, hooks.op_slot(hooks.ctx, t.symbol),
                                   static_cast<std::int8_t>(t.args.size())});
      return;
    }
  }
  fail("internal", "unreachable term kind");
}

Prog compile_prog(const Term& t, const CompileHooks& hooks) {
  Prog p;
  compile_term(t, hooks, p);
  return p;
}

CompiledEq compile_eq(const Equation& eq, const CompileHooks& hooks) {
  return CompiledEq{compile_prog(eq.lhs, hooks), compile_prog(eq.rhs, hooks)};
}

}  // namespace

CompiledClause compile_clause(const Clause& c, const CompileHooks& hooks) {
  CompiledClause out;
  for (const Equation& eq : c.premises)
    out.premises.push_back(compile_eq(eq, hooks));
  out.conclusion = compile_eq(c.conclusion, hooks);
  out.var_mask = c.var_mask();
  return out;
}

int eval_prog(const Prog& p, const EvalEnv& env, int& blocked) {
  // Stack depth is bounded by program length; clause terms stay tiny.
  int stack[64];
  int top = 0;
  for (const Prog::Ins& ins : p.code) {
    switch (ins.op) {
      case 0:
        stack[top++] = env.vars[ins.payload];
        break;
      case 1:
        stack[top++] = env.const_values[static_cast<std::size_t>(ins.slot)];
        break;
      default: {
        const TableRef& t = env.tables[static_cast<std::size_t>(ins.slot)];
        top -= ins.payload;
        int idx = stack[top];
        bool unknown = idx < 0;
        for (int k = 1; k < ins.payload; ++k) {
          int a = stack[top + k];
          if (a < 0) unknown = true;
          idx = idx * t.order + a;
        }
        if (unknown) {
          stack[top++] = -1;
          break;
        }
        int v = t.entries[idx];
        if (v < 0 && blocked < 0) blocked = t.base + idx;
        stack[top++] = v;
        break;
      }
    }
  }
  return stack[0];
}

Tri eval_instance(const CompiledClause& c, const EvalEnv& env, int& blocked) {
  bool pending = false;
  for (const CompiledEq& eq : c.premises) {
    int a = eval_prog(eq.lhs, env, blocked);
    int b = eval_prog(eq.rhs, env, blocked);
    if (a < 0 || b < 0)
      pending = true;
    else if (a != b)
      return Tri::Satisfied;
  }
  int a = eval_prog(c.conclusion.lhs, env, blocked);
  int b = eval_prog(c.conclusion.rhs, env, blocked);
  if (a >= 0 && b >= 0) {
    if (a == b) return Tri::Satisfied;
    return pending ? Tri::Pending : Tri::Violated;
  }
  return Tri::Pending;
}

}  // namespace finalg
