#include "finalg/clause.hpp"

#include <cctype>
#include <sstream>

#include "finalg/compile.hpp"

namespace finalg {

Term Term::make_var(int v) {
  Term t;
  t.kind = Kind::Var;
  t.var = v;
  return t;
}

Term Term::make_const(std::string name) {
  Term t;
  t.kind = Kind::Const;
  t.constant = std::move(name);
  return t;
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  Term t;
  t.kind = Kind::Apply;
  t.symbol = std::move(symbol);
  t.args = std::move(args);
  return t;
}

namespace {

int var_index(std::string_view ident) {
  if (ident.size() != 1) return -1;
  for (int i = 0; i < kNumClauseVars; ++i)
    if (kClauseVars[static_cast<std::size_t>(i)] == ident[0]) return i;
  return -1;
}

struct ClauseToken {
  enum Kind {
    Ident,
    Star,
    Prime,
    Hat,
    LBrack,
    RBrack,
    LParen,
    RParen,
    Eq,
    Amp,
    Implies,
    End,
  };
  Kind kind;
  std::string text;
  int col;
};

std::vector<ClauseToken> lex_clause(std::string_view text) {
  std::vector<ClauseToken> out;
  std::size_t i = 0;
  auto push = [&](ClauseToken::Kind k, std::string t, std::size_t at) {
    out.push_back(ClauseToken{k, std::move(t), static_cast<int>(at) + 1});
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '*': push(ClauseToken::Star, "*", i); ++i; continue;
      case '\'': push(ClauseToken::Prime, "'", i); ++i; continue;
      case '^': push(ClauseToken::Hat, "^", i); ++i; continue;
      case '[': push(ClauseToken::LBrack, "[", i); ++i; continue;
      case ']': push(ClauseToken::RBrack, "]", i); ++i; continue;
      case '(': push(ClauseToken::LParen, "(", i); ++i; continue;
      case ')': push(ClauseToken::RParen, ")", i); ++i; continue;
      case '&': push(ClauseToken::Amp, "&", i); ++i; continue;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(ClauseToken::Implies, "=>", i);
          i += 2;
        } else {
          push(ClauseToken::Eq, "=", i);
          ++i;
        }
        continue;
      default:
        break;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      push(ClauseToken::Ident, std::string(text.substr(start, i - start)),
           start);
      continue;
    }
    fail("parse-error", "clause col " + std::to_string(i + 1) +
                            ": unexpected character '" + std::string(1, c) +
                            "'");
  }
  push(ClauseToken::End, "", text.size());
  return out;
}

class ClauseParser {
 public:
  explicit ClauseParser(std::string_view text)
      : text_(text), toks_(lex_clause(text)) {}

  Clause run() {
    Clause c;
    c.text = std::string(text_);
    std::vector<Equation> eqs;
    eqs.push_back(parse_eq());
    while (peek().kind == ClauseToken::Amp) {
      next();
      eqs.push_back(parse_eq());
    }
    if (peek().kind == ClauseToken::Implies) {
      next();
      c.premises = std::move(eqs);
      c.conclusion = parse_eq();
    } else {
      if (eqs.size() != 1)
        fail("parse-error", "clause: '&'-joined equations need '=>'");
      c.conclusion = std::move(eqs.front());
    }
    expect(ClauseToken::End, "end of clause");
    return c;
  }

 private:
  std::string_view text_;
  std::vector<ClauseToken> toks_;
  std::size_t pos_ = 0;

  const ClauseToken& peek() const { return toks_[pos_]; }
  const ClauseToken& next() { return toks_[pos_++]; }

  void expect(ClauseToken::Kind k, const char* what) {
    if (peek().kind != k)
      fail("parse-error", "clause col " + std::to_string(peek().col) +
                              ": expected " + what);
    next();
  }

  Equation parse_eq() {
    Equation eq;
    eq.lhs = parse_term();
    expect(ClauseToken::Eq, "'='");
    eq.rhs = parse_term();
    return eq;
  }

  Term parse_term() {
    Term t = parse_factor();
    while (peek().kind == ClauseToken::Star) {
      next();
      Term rhs = parse_factor();
      std::vector<Term> args;
      args.push_back(std::move(t));
      args.push_back(std::move(rhs));
      t = Term::apply("*", std::move(args));
    }
    return t;
  }

  Term parse_factor() {
    Term t = parse_atom();
    for (;;) {
      if (peek().kind == ClauseToken::Prime) {
        next();
        std::vector<Term> args;
        args.push_back(std::move(t));
        t = Term::apply("'", std::move(args));
      } else if (peek().kind == ClauseToken::Hat) {
        next();
        std::vector<Term> args;
        args.push_back(std::move(t));
        t = Term::apply("^", std::move(args));
      } else {
        break;
      }
    }
    return t;
  }

  Term parse_atom() {
    const ClauseToken& tok = peek();
    switch (tok.kind) {
      case ClauseToken::Ident: {
        next();
        int v = var_index(tok.text);
        if (v >= 0) return Term::make_var(v);
        return Term::make_const(tok.text);
      }
      case ClauseToken::LBrack: {
        next();
        Term a = parse_term();
        Term b = parse_term();
        Term c = parse_term();
        expect(ClauseToken::RBrack, "']'");
        std::vector<Term> args;
        args.push_back(std::move(a));
        args.push_back(std::move(b));
        args.push_back(std::move(c));
        return Term::apply("[]", std::move(args));
      }
      case ClauseToken::LParen: {
        next();
        Term t = parse_term();
        expect(ClauseToken::RParen, "')'");
        return t;
      }
      default:
        fail("parse-error", "clause col " + std::to_string(tok.col) +
                                ": expected a term");
    }
  }
};

void collect_vars(const Term& t, int& mask) {
  if (t.kind == Term::Kind::Var)
    mask |= 1 << t.var;
  else
    for (const Term& a : t.args) collect_vars(a, mask);
}

void collect_consts(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Const) {
    for (const auto& c : out)
      if (c == t.constant) return;
    out.push_back(t.constant);
  } else {
    for (const Term& a : t.args) collect_consts(a, out);
  }
}

}  // namespace

int Clause::var_mask() const {
  int mask = 0;
  for (const auto& eq : premises) {
    collect_vars(eq.lhs, mask);
    collect_vars(eq.rhs, mask);
  }
  collect_vars(conclusion.lhs, mask);
  collect_vars(conclusion.rhs, mask);
  return mask;
}

std::vector<std::string> Clause::constants() const {
  std::vector<std::string> out;
  for (const auto& eq : premises) {
    collect_consts(eq.lhs, out);
    collect_consts(eq.rhs, out);
  }
  collect_consts(conclusion.lhs, out);
  collect_consts(conclusion.rhs, out);
  return out;
}

Clause parse_clause(std::string_view text) { return ClauseParser(text).run(); }

std::vector<std::pair<std::string, Clause>> parse_clause_catalog(
    std::string_view text) {
  std::vector<std::pair<std::string, Clause>> out;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos)
        fail("parse-error",
             "line " + std::to_string(lineno) + ": expected 'name: clause'");
      std::string name(line.substr(0, colon));
      while (!name.empty() && std::isspace(static_cast<unsigned char>(
                                  name.back())))
        name.pop_back();
      std::size_t ns = 0;
      while (ns < name.size() &&
             std::isspace(static_cast<unsigned char>(name[ns])))
        ++ns;
      name = name.substr(ns);
      if (name.empty())
        fail("parse-error", "line " + std::to_string(lineno) + ": empty name");
      out.emplace_back(std::move(name),
                       parse_clause(line.substr(colon + 1)));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

const std::string& Binding::op_for(const std::string& symbol) const {
  if (symbol == "*") return mul;
  if (symbol == "[]") return ternary;
  if (symbol == "'") return prime;
  if (symbol == "^") return hat;
  fail("unbound-symbol", "no binding for clause symbol '" + symbol + "'");
}

std::string Binding::resolve_const(const std::string& token) const {
  auto it = consts.find(token);
  return it == consts.end() ? token : it->second;
}

std::string Assignment::render(const Carrier& carrier) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < kNumClauseVars; ++i) {
    if (values[static_cast<std::size_t>(i)] < 0) continue;
    if (!first) out << " ";
    first = false;
    out << kClauseVars[static_cast<std::size_t>(i)] << "="
        << carrier.name_of(values[static_cast<std::size_t>(i)]);
  }
  return out.str();
}

namespace {

// Compile against a complete structure: slots are discovered op names,
// constant slots hold resolved element indices.
struct StructureCompileCtx {
  const Structure* s;
  const Binding* binding;
  std::vector<const OpTable*> tables;
  std::vector<int> const_values;
  std::vector<std::string> table_names;

  std::int16_t op_slot(const std::string& symbol) {
    int expect_arity = symbol == "*" ? 2 : symbol == "[]" ? 3 : 1;
    const std::string& opname = binding->op_for(symbol);
    const OpTable* t = s->find_op(opname);
    if (!t)
      fail("missing-binding", "clause symbol '" + symbol + "' binds to op '" +
                                  opname + "', absent from structure '" +
                                  s->name + "'");
    if (t->arity != expect_arity)
      fail("arity-mismatch", "clause symbol '" + symbol + "' binds to op '" +
                                 opname + "' of arity " +
                                 std::to_string(t->arity));
    for (std::size_t i = 0; i < tables.size(); ++i)
      if (tables[i] == t) return static_cast<std::int16_t>(i);
    tables.push_back(t);
    table_names.push_back(opname);
    return static_cast<std::int16_t>(tables.size() - 1);
  }

  std::int16_t const_slot(const std::string& token) {
    std::string cname = binding->resolve_const(token);
    if (!s->has_const(cname))
      fail("missing-binding", "clause constant '" + token +
                                  "' resolves to '" + cname +
                                  "', absent from structure '" + s->name +
                                  "'");
    const_values.push_back(s->constant(cname));
    return static_cast<std::int16_t>(const_values.size() - 1);
  }
};

}  // namespace

CheckResult check_clause(const Structure& s, const Clause& c,
                         const Binding& binding) {
  StructureCompileCtx ctx{&s, &binding, {}, {}, {}};
  CompileHooks hooks;
  hooks.ctx = &ctx;
  hooks.op_slot = [](void* p, const std::string& sym) {
    return static_cast<StructureCompileCtx*>(p)->op_slot(sym);
  };
  hooks.const_slot = [](void* p, const std::string& tok) {
    return static_cast<StructureCompileCtx*>(p)->const_slot(tok);
  };
  CompiledClause cc = compile_clause(c, hooks);

  std::vector<TableRef> refs;
  for (const OpTable* t : ctx.tables)
    refs.push_back(TableRef{t->entries.data(), t->order, t->arity, 0});

  const int n = s.order();
  int vars[kNumClauseVars] = {0, 0, 0, 0, 0, 0, 0};
  EvalEnv env{refs, ctx.const_values, vars};

  std::vector<int> active;
  for (int i = 0; i < kNumClauseVars; ++i)
    if (cc.var_mask & (1 << i)) active.push_back(i);

  // odometer, x slowest: lexicographically first counterexample
  for (;;) {
    int blocked = -1;
    if (eval_instance(cc, env, blocked) == Tri::Violated) {
      Assignment a;
      for (int i : active) a.values[static_cast<std::size_t>(i)] = vars[i];
      return CheckResult{false, a};
    }
    int k = static_cast<int>(active.size()) - 1;
    while (k >= 0) {
      if (++vars[active[static_cast<std::size_t>(k)]] < n) break;
      vars[active[static_cast<std::size_t>(k)]] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return CheckResult{true, std::nullopt};
}

CheckResult check_clause(const Structure& s, std::string_view clause_text,
                         const Binding& binding) {
  return check_clause(s, parse_clause(clause_text), binding);
}

}  // namespace finalg
