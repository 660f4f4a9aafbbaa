#include "finalg/algebra.hpp"

#include <algorithm>
#include <set>

namespace finalg {

const std::string& Carrier::name_of(int i) const {
  if (i < 0 || i >= order())
    fail("index-out-of-range", "element index " + std::to_string(i));
  return names[static_cast<std::size_t>(i)];
}

OpTable OpTable::filled(int arity, int order, int value) {
  OpTable t;
  t.arity = arity;
  t.order = order;
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(order);
  t.entries.assign(n, value);
  return t;
}

const OpTable& Structure::op(const std::string& name) const {
  const OpTable* t = find_op(name);
  if (!t) fail("unknown-op", "structure '" + this->name + "' has no op '" +
                                 name + "'");
  return *t;
}

int Structure::constant(const std::string& name) const {
  auto it = consts.find(name);
  if (it == consts.end())
    fail("unknown-const",
         "structure '" + this->name + "' has no constant '" + name + "'");
  return it->second;
}

void validate(const Structure& s) {
  const int n = s.order();
  if (n <= 0) fail("parse-error", "structure '" + s.name + "' has no elements");
  std::set<std::string> seen;
  for (const auto& nm : s.carrier.names) {
    if (nm.empty()) fail("parse-error", "empty element token");
    if (!seen.insert(nm).second)
      fail("duplicate-element", "element '" + nm + "' declared twice");
  }
  for (const auto& [opname, t] : s.ops) {
    if (t.arity < 1 || t.arity > 3)
      fail("parse-error", "op '" + opname + "' has unsupported arity " +
                              std::to_string(t.arity));
    if (t.arity == 3 && n > kMaxTernaryOrder)
      fail("cap-exceeded", "ternary op '" + opname + "' at order " +
                               std::to_string(n) + " exceeds cap " +
                               std::to_string(kMaxTernaryOrder));
    if (t.order != n)
      fail("parse-error", "op '" + opname + "' built for order " +
                              std::to_string(t.order) + ", structure has " +
                              std::to_string(n));
    std::size_t want = 1;
    for (int i = 0; i < t.arity; ++i) want *= static_cast<std::size_t>(n);
    if (t.entries.size() != want)
      fail("ragged-table", "op '" + opname + "' has " +
                               std::to_string(t.entries.size()) +
                               " cells, expected " + std::to_string(want));
    for (int v : t.entries)
      if (v < 0 || v >= n)
        fail("index-out-of-range",
             "op '" + opname + "' contains entry " + std::to_string(v));
  }
  for (const auto& [cname, v] : s.consts)
    if (v < 0 || v >= n)
      fail("index-out-of-range",
           "constant '" + cname + "' = " + std::to_string(v));
}

int eval(const Structure& s, const std::string& op, std::span<const int> args) {
  const OpTable& t = s.op(op);
  if (static_cast<int>(args.size()) != t.arity)
    fail("arity-mismatch", "op '" + op + "' has arity " +
                               std::to_string(t.arity) + ", got " +
                               std::to_string(args.size()) + " arguments");
  const int n = t.order;
  for (int a : args)
    if (a < 0 || a >= n)
      fail("index-out-of-range", "argument " + std::to_string(a));
  switch (t.arity) {
    case 1:
      return t.at(args[0]);
    case 2:
      return t.at(args[0], args[1]);
    default:
      return t.at(args[0], args[1], args[2]);
  }
}

Structure adjoin_identity(const Structure& s, const std::string& mul) {
  const OpTable& old = s.op(mul);
  if (old.arity != 2)
    fail("arity-mismatch", "adjoin-identity needs a binary op, '" + mul +
                               "' has arity " + std::to_string(old.arity));
  const int n = s.order();

  std::string token = "1";
  while (s.carrier.index_of(token)) token += "'";

  Structure out;
  out.name = s.name.empty() ? "adjoined" : s.name + "1";
  out.carrier = s.carrier;
  out.carrier.names.push_back(token);
  out.consts = s.consts;
  out.consts["1"] = n;

  OpTable t = OpTable::filled(2, n + 1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t.cell(a, b) = old.at(a, b);
  for (int a = 0; a <= n; ++a) {
    t.cell(a, n) = a;
    t.cell(n, a) = a;
  }
  out.ops[mul] = std::move(t);
  validate(out);
  return out;
}

OpTable relabel(const OpTable& t, std::span<const int> perm) {
  const int n = t.order;
  OpTable out = OpTable::filled(t.arity, n);
  switch (t.arity) {
    case 1:
      for (int a = 0; a < n; ++a) out.cell(perm[a]) = perm[t.at(a)];
      break;
    case 2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          out.cell(perm[a], perm[b]) = perm[t.at(a, b)];
      break;
    default:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            out.cell(perm[a], perm[b], perm[c]) = perm[t.at(a, b, c)];
  }
  return out;
}

Structure relabel(const Structure& s, std::span<const int> perm) {
  Structure out;
  out.name = s.name;
  out.carrier.names.resize(s.carrier.names.size());
  for (int i = 0; i < s.order(); ++i)
    out.carrier.names[perm[i]] = s.carrier.names[i];
  for (const auto& [name, t] : s.ops) out.ops[name] = relabel(t, perm);
  for (const auto& [name, v] : s.consts) out.consts[name] = perm[v];
  return out;
}

Carrier default_carrier(int order) {
  Carrier c;
  for (int i = 0; i < order; ++i) {
    if (order <= 26 && i < 26)
      c.names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      c.names.push_back("e" + std::to_string(i));
  }
  return c;
}

}  // namespace finalg
