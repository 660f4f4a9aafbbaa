#include "finalg/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "finalg/compile.hpp"
#include "finalg/error.hpp"

namespace finalg {

EnumSignature EnumSignature::binary() {
  EnumSignature s;
  s.ops.push_back(OpSpec{"mul", 2});
  return s;
}

EnumSignature EnumSignature::ternary() {
  EnumSignature s;
  s.ops.push_back(OpSpec{"t", 3});
  return s;
}

EnumSignature EnumSignature::binary_unary() {
  EnumSignature s = binary();
  s.ops.push_back(OpSpec{"inv", 1});
  return s;
}

EnumSignature EnumSignature::ternary_two_unary() {
  EnumSignature s = ternary();
  s.ops.push_back(OpSpec{"inv", 1});
  s.ops.push_back(OpSpec{"hat", 1});
  return s;
}

EnumSpec& EnumSpec::with_clause(std::string_view text) {
  clauses.push_back(parse_clause(text));
  return *this;
}

EnumSpec& EnumSpec::with_prop(Prop p) {
  props.push_back(p);
  return *this;
}

namespace {

struct Block {
  std::string name;
  int arity = 2;
  int base = 0;
  int size = 0;
};

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Problem picture shared by the engine and the oracle: cell blocks, the
// effective clause set (explicit clauses + clause-backed property clauses),
// declared constants, leaf-time built-in properties, cancellation hooks.
struct Plan {
  int n = 0;
  std::vector<Block> blocks;
  std::vector<Clause> clauses;
  std::vector<Prop> leaf_props;
  std::vector<std::string> const_names;
  std::vector<int> pinned;  // per const: pinned value or -1
  bool hook_left = false, hook_right = false;
  int mul_block = -1;
  int total_cells = 0;
};

const Block* find_block(const std::vector<Block>& blocks,
                        const std::string& name) {
  for (const Block& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

Plan build_plan(const EnumSpec& spec) {
  Plan plan;
  plan.n = spec.order;
  if (spec.order < 1)
    fail("precondition-violated", "enumeration order must be positive");

  int base = 0;
  for (const auto& op : spec.signature.ops) {
    if (op.arity < 1 || op.arity > 3)
      fail("precondition-violated",
           "signature op '" + op.name + "' has unsupported arity");
    if (find_block(plan.blocks, op.name))
      fail("precondition-violated",
           "signature op '" + op.name + "' declared twice");
    if (op.arity == 3 && spec.order > kMaxTernaryOrder)
      fail("cap-exceeded", "ternary enumeration beyond order " +
                               std::to_string(kMaxTernaryOrder));
    int size = static_cast<int>(ipow(static_cast<std::size_t>(spec.order),
                                     op.arity));
    plan.blocks.push_back(Block{op.name, op.arity, base, size});
    base += size;
  }
  plan.total_cells = base;

  const Block* mul = find_block(plan.blocks, "mul");
  if (mul && mul->arity == 2)
    plan.mul_block = static_cast<int>(mul - plan.blocks.data());

  Binding binding;
  auto require_needs = [&](const PropertyInfo& info) {
    auto check = [&](bool needed, const std::string& opname, int arity) {
      if (!needed) return;
      const Block* b = find_block(plan.blocks, opname);
      if (!b || b->arity != arity)
        fail("missing-binding", "property " + info.token +
                                    " needs op '" + opname +
                                    "' in the signature");
    };
    check(info.needs.mul, binding.mul, 2);
    check(info.needs.ternary, binding.ternary, 3);
    check(info.needs.prime, binding.prime, 1);
  };

  plan.clauses = spec.clauses;
  for (Prop p : spec.props) {
    const PropertyInfo& info = property_info(p);
    require_needs(info);
    if (info.builtin) {
      plan.leaf_props.push_back(p);
      continue;
    }
    // cancellation is pruned by the row/column hooks instead of clauses
    if (p == Prop::LeftCancellative) {
      plan.hook_left = true;
      continue;
    }
    if (p == Prop::RightCancellative) {
      plan.hook_right = true;
      continue;
    }
    if (p == Prop::WardQuasigroup) {
      plan.hook_left = plan.hook_right = true;
      plan.clauses.push_back(parse_clause("(x*z)*(y*z) = x*y"));
      continue;
    }
    for (const std::string& text : info.clause_texts)
      plan.clauses.push_back(parse_clause(text));
  }
  if ((plan.hook_left || plan.hook_right) && plan.mul_block < 0)
    fail("missing-binding", "cancellation needs a binary op 'mul'");

  // declared constants, then clause constants, then pin-only constants
  auto declare = [&](const std::string& name) {
    for (const auto& c : plan.const_names)
      if (c == name) return;
    plan.const_names.push_back(name);
  };
  for (const auto& c : spec.signature.consts) declare(c);
  for (const Clause& c : plan.clauses)
    for (const auto& tok : c.constants()) declare(tok);
  for (const auto& [name, value] : spec.pins) declare(name);

  plan.pinned.assign(plan.const_names.size(), -1);
  for (const auto& [name, value] : spec.pins) {
    if (value < 0 || value >= spec.order)
      fail("index-out-of-range",
           "pin " + name + "=" + std::to_string(value) + " out of range");
    for (std::size_t i = 0; i < plan.const_names.size(); ++i)
      if (plan.const_names[i] == name) plan.pinned[i] = value;
  }
  return plan;
}

std::vector<int> canon_key(const Structure& s) {
  std::vector<int> key;
  for (const auto& [name, value] : s.consts) key.push_back(value);
  for (const auto& [name, table] : s.ops)
    key.insert(key.end(), table.entries.begin(), table.entries.end());
  return key;
}

bool lex_least_in_orbit(const Structure& s, const Plan& plan) {
  const int n = s.order();
  std::vector<int> base_key = canon_key(s);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool pin_ok = true;
    for (std::size_t i = 0; i < plan.const_names.size() && pin_ok; ++i)
      if (plan.pinned[i] >= 0 &&
          perm[static_cast<std::size_t>(plan.pinned[i])] != plan.pinned[i])
        pin_ok = false;
    if (!pin_ok) continue;
    if (canon_key(relabel(s, perm)) < base_key) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

bool leaf_props_hold(const Structure& s, const Plan& plan) {
  for (Prop p : plan.leaf_props)
    if (!check_property(s, p).holds) return false;
  return true;
}

// ---- search engine ----

struct Instance {
  int clause = 0;
  std::array<int, kNumClauseVars> vars{};
  int reg_cell = -1;  // largest statically known cell
};

class Engine {
 public:
  Engine(const EnumSpec& spec, const ModelCallback& cb)
      : spec_(spec), plan_(build_plan(spec)), cb_(cb) {
    n_ = plan_.n;
    cells_.assign(static_cast<std::size_t>(plan_.total_cells), -1);
    carrier_ = default_carrier(n_);
    compile_all();
  }

  void run() {
    const_values_.assign(plan_.const_names.size(), 0);
    sweep_consts(0);
  }

 private:
  const EnumSpec& spec_;
  Plan plan_;
  const ModelCallback& cb_;
  int n_ = 0;
  std::vector<int> cells_;
  Carrier carrier_;
  std::vector<CompiledClause> compiled_;
  std::vector<TableRef> refs_;
  std::vector<int> const_values_;
  std::vector<Instance> instances_;
  std::vector<std::vector<int>> static_at_;
  std::vector<std::vector<int>> watches_;
  std::vector<std::vector<int>> trail_;
  std::uint64_t emitted_ = 0;
  bool stop_ = false;

  struct Hooks {
    std::vector<Block>* blocks;
    std::vector<std::string>* const_names;
  };

  void compile_all() {
    Hooks h{&plan_.blocks, &plan_.const_names};
    CompileHooks ch;
    ch.ctx = &h;
    ch.op_slot = [](void* ctx, const std::string& symbol) -> std::int16_t {
      auto* hp = static_cast<Hooks*>(ctx);
      Binding b;
      int arity = symbol == "*" ? 2 : symbol == "[]" ? 3 : 1;
      const std::string& opname = b.op_for(symbol);
      for (std::size_t i = 0; i < hp->blocks->size(); ++i)
        if ((*hp->blocks)[i].name == opname) {
          if ((*hp->blocks)[i].arity != arity)
            fail("arity-mismatch", "clause symbol '" + symbol +
                                       "' needs arity " +
                                       std::to_string(arity));
          return static_cast<std::int16_t>(i);
        }
      fail("missing-binding",
           "clause needs op '" + opname + "' in the signature");
    };
    ch.const_slot = [](void* ctx, const std::string& token) -> std::int16_t {
      auto* hp = static_cast<Hooks*>(ctx);
      for (std::size_t i = 0; i < hp->const_names->size(); ++i)
        if ((*hp->const_names)[i] == token)
          return static_cast<std::int16_t>(i);
      fail("internal", "clause constant not declared: " + token);
    };
    for (const Clause& c : plan_.clauses)
      compiled_.push_back(compile_clause(c, ch));
    for (const Block& b : plan_.blocks)
      refs_.push_back(TableRef{cells_.data() + b.base, n_, b.arity, b.base});
  }

  // statically known cells of one program under an instance's variables
  void scan_static(const Prog& p, const int* vars, int& max_cell) const {
    struct Slot {
      bool known;
      int value;
    };
    std::vector<Slot> stack;
    for (const Prog::Ins& ins : p.code) {
      if (ins.op == 0) {
        stack.push_back(Slot{true, vars[ins.payload]});
      } else if (ins.op == 1) {
        stack.push_back(
            Slot{true, const_values_[static_cast<std::size_t>(ins.slot)]});
      } else {
        const Block& b = plan_.blocks[static_cast<std::size_t>(ins.slot)];
        bool known = true;
        int flat = 0;
        for (int k = 0; k < ins.payload; ++k) {
          const Slot& s =
              stack[stack.size() - static_cast<std::size_t>(ins.payload - k)];
          if (!s.known) known = false;
          flat = flat * n_ + s.value;
        }
        stack.resize(stack.size() - static_cast<std::size_t>(ins.payload));
        if (known) max_cell = std::max(max_cell, b.base + flat);
        stack.push_back(Slot{false, 0});
      }
    }
  }

  // Per constant combination: one instance per clause per assignment of its
  // variables. Returns false when a table-free instance is already violated.
  bool build_instances() {
    instances_.clear();
    static_at_.assign(static_cast<std::size_t>(plan_.total_cells), {});
    watches_.assign(static_cast<std::size_t>(plan_.total_cells), {});
    trail_.assign(static_cast<std::size_t>(plan_.total_cells), {});
    for (std::size_t ci = 0; ci < compiled_.size(); ++ci) {
      const CompiledClause& cc = compiled_[ci];
      std::vector<int> active;
      for (int v = 0; v < kNumClauseVars; ++v)
        if (cc.var_mask & (1 << v)) active.push_back(v);
      Instance inst;
      inst.clause = static_cast<int>(ci);
      inst.vars.fill(0);
      for (;;) {
        int max_cell = -1;
        for (const CompiledEq& eq : cc.premises) {
          scan_static(eq.lhs, inst.vars.data(), max_cell);
          scan_static(eq.rhs, inst.vars.data(), max_cell);
        }
        scan_static(cc.conclusion.lhs, inst.vars.data(), max_cell);
        scan_static(cc.conclusion.rhs, inst.vars.data(), max_cell);
        inst.reg_cell = max_cell;
        if (max_cell < 0) {
          int blocked = -1;
          EvalEnv env{refs_, const_values_, inst.vars.data()};
          if (eval_instance(cc, env, blocked) == Tri::Violated) return false;
        } else {
          static_at_[static_cast<std::size_t>(max_cell)].push_back(
              static_cast<int>(instances_.size()));
          instances_.push_back(inst);
        }
        int k = static_cast<int>(active.size()) - 1;
        while (k >= 0) {
          int v = active[static_cast<std::size_t>(k)];
          if (++inst.vars[static_cast<std::size_t>(v)] < n_) break;
          inst.vars[static_cast<std::size_t>(v)] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
    return true;
  }

  void sweep_consts(std::size_t idx) {
    if (stop_) return;
    if (idx == plan_.const_names.size()) {
      if (build_instances()) dfs(0);
      return;
    }
    if (plan_.pinned[idx] >= 0) {
      const_values_[idx] = plan_.pinned[idx];
      sweep_consts(idx + 1);
      return;
    }
    for (int v = 0; v < n_ && !stop_; ++v) {
      const_values_[idx] = v;
      sweep_consts(idx + 1);
    }
  }

  // evaluate one instance against the current partial table
  Tri probe(int inst_id, int& blocked) {
    const Instance& inst = instances_[static_cast<std::size_t>(inst_id)];
    EvalEnv env{refs_, const_values_,
                instances_[static_cast<std::size_t>(inst_id)].vars.data()};
    return eval_instance(compiled_[static_cast<std::size_t>(inst.clause)],
                         env, blocked);
  }

  bool cell_ok(int cell, int value) {
    if (plan_.mul_block >= 0 && (plan_.hook_left || plan_.hook_right)) {
      const Block& b =
          plan_.blocks[static_cast<std::size_t>(plan_.mul_block)];
      if (cell >= b.base && cell < b.base + b.size) {
        int local = cell - b.base;
        int row = local / n_, col = local % n_;
        if (plan_.hook_left)
          for (int j = 0; j < n_; ++j)
            if (j != col && cells_[static_cast<std::size_t>(
                                b.base + row * n_ + j)] == value)
              return false;
        if (plan_.hook_right)
          for (int i = 0; i < n_; ++i)
            if (i != row && cells_[static_cast<std::size_t>(
                                b.base + i * n_ + col)] == value)
              return false;
      }
    }
    for (int inst_id : static_at_[static_cast<std::size_t>(cell)]) {
      int blocked = -1;
      Tri r = probe(inst_id, blocked);
      if (r == Tri::Violated) return false;
      if (r == Tri::Pending) {
        watches_[static_cast<std::size_t>(blocked)].push_back(inst_id);
        trail_[static_cast<std::size_t>(cell)].push_back(blocked);
      }
    }
    for (std::size_t wi = 0;
         wi < watches_[static_cast<std::size_t>(cell)].size(); ++wi) {
      int inst_id = watches_[static_cast<std::size_t>(cell)][wi];
      int blocked = -1;
      Tri r = probe(inst_id, blocked);
      if (r == Tri::Violated) return false;
      if (r == Tri::Pending) {
        watches_[static_cast<std::size_t>(blocked)].push_back(inst_id);
        trail_[static_cast<std::size_t>(cell)].push_back(blocked);
      }
    }
    return true;
  }

  void unwind(int cell) {
    for (auto it = trail_[static_cast<std::size_t>(cell)].rbegin();
         it != trail_[static_cast<std::size_t>(cell)].rend(); ++it)
      watches_[static_cast<std::size_t>(*it)].pop_back();
    trail_[static_cast<std::size_t>(cell)].clear();
  }

  void dfs(int cell) {
    if (stop_) return;
    if (cell == plan_.total_cells) {
      emit();
      return;
    }
    for (int v = 0; v < n_ && !stop_; ++v) {
      cells_[static_cast<std::size_t>(cell)] = v;
      if (cell_ok(cell, v)) dfs(cell + 1);
      unwind(cell);
    }
    cells_[static_cast<std::size_t>(cell)] = -1;
  }

  void emit() {
    Structure s;
    s.carrier = carrier_;
    for (const Block& b : plan_.blocks) {
      OpTable t;
      t.arity = b.arity;
      t.order = n_;
      t.entries.assign(cells_.begin() + b.base,
                       cells_.begin() + b.base + b.size);
      s.ops.emplace(b.name, std::move(t));
    }
    for (std::size_t i = 0; i < plan_.const_names.size(); ++i)
      s.consts[plan_.const_names[i]] = const_values_[i];
    if (!leaf_props_hold(s, plan_)) return;
    if (spec_.up_to_iso && !lex_least_in_orbit(s, plan_)) return;
    ++emitted_;
    s.name = "m" + std::to_string(emitted_);
    if (!cb_(s)) stop_ = true;
  }
};

}  // namespace

void enumerate(const EnumSpec& spec, const ModelCallback& on_model) {
  Engine(spec, on_model).run();
}

std::vector<Structure> enumerate_all(const EnumSpec& spec) {
  std::vector<Structure> out;
  enumerate(spec, [&](const Structure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::uint64_t count_models(const EnumSpec& spec) {
  std::uint64_t count = 0;
  enumerate(spec, [&](const Structure&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Structure> naive_enumerate(const EnumSpec& spec,
                                       std::uint64_t space_cap) {
  Plan plan = build_plan(spec);
  const int n = plan.n;

  int free_consts = 0;
  for (std::size_t i = 0; i < plan.const_names.size(); ++i)
    if (plan.pinned[i] < 0) ++free_consts;
  double bits = (plan.total_cells + free_consts) * std::log2(double(n));
  if (n > 1 && bits > std::log2(double(space_cap)))
    fail("cap-exceeded", "assignment space exceeds the oracle cap");

  std::vector<int> consts(plan.const_names.size(), 0);
  for (std::size_t i = 0; i < plan.const_names.size(); ++i)
    if (plan.pinned[i] >= 0) consts[i] = plan.pinned[i];
  std::vector<int> cells(static_cast<std::size_t>(plan.total_cells), 0);
  Carrier carrier = default_carrier(n);
  Binding binding;

  std::vector<Structure> out;
  auto visit = [&]() {
    Structure s;
    s.carrier = carrier;
    for (const Block& b : plan.blocks) {
      OpTable t;
      t.arity = b.arity;
      t.order = n;
      t.entries.assign(cells.begin() + b.base,
                       cells.begin() + b.base + b.size);
      s.ops.emplace(b.name, std::move(t));
    }
    for (std::size_t i = 0; i < plan.const_names.size(); ++i)
      s.consts[plan.const_names[i]] = consts[i];
    if (plan.hook_left &&
        !check_property(s, Prop::LeftCancellative, binding).holds)
      return;
    if (plan.hook_right &&
        !check_property(s, Prop::RightCancellative, binding).holds)
      return;
    for (const Clause& c : plan.clauses)
      if (!check_clause(s, c, binding).holds) return;
    for (Prop p : plan.leaf_props)
      if (!check_property(s, p, binding).holds) return;
    if (spec.up_to_iso && !lex_least_in_orbit(s, plan)) return;
    s.name = "m" + std::to_string(out.size() + 1);
    out.push_back(std::move(s));
  };

  // odometer: constants outermost (declaration order slowest), then cells
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < plan.const_names.size(); ++i)
    if (plan.pinned[i] < 0) free_idx.push_back(i);
  for (;;) {
    for (;;) {
      visit();
      int k = plan.total_cells - 1;
      while (k >= 0) {
        if (++cells[static_cast<std::size_t>(k)] < n) break;
        cells[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
    int k = static_cast<int>(free_idx.size()) - 1;
    while (k >= 0) {
      if (++consts[free_idx[static_cast<std::size_t>(k)]] < n) break;
      consts[free_idx[static_cast<std::size_t>(k)]] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace finalg
