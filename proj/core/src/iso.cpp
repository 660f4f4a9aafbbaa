#include "finalg/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "finalg/error.hpp"

namespace finalg {

std::vector<int> Bijection::inverse() const {
  std::vector<int> inv(forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i)
    inv[static_cast<std::size_t>(forward[i])] = static_cast<int>(i);
  return inv;
}

std::string Bijection::render(const Carrier& left,
                              const Carrier& right) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (i) out << " ";
    out << left.name_of(static_cast<int>(i)) << "->"
        << right.name_of(forward[i]);
  }
  return out.str();
}

IsoTask IsoTask::binary(const Structure& a, const Structure& b,
                        const std::string& mul) {
  return IsoTask{&a, &b, {{mul, mul}}};
}

IsoTask IsoTask::ternary(const Structure& a, const Structure& b,
                         const std::string& t) {
  return IsoTask{&a, &b, {{t, t}}};
}

namespace {

struct TablePair {
  const OpTable* left;
  const OpTable* right;
};

std::vector<TablePair> resolve_tables(const IsoTask& task) {
  std::vector<TablePair> out;
  for (const auto& [ln, rn] : task.op_pairs) {
    const OpTable& lt = task.left->op(ln);
    const OpTable& rt = task.right->op(rn);
    if (lt.arity != rt.arity)
      fail("arity-mismatch", "cannot pair op '" + ln + "' (arity " +
                                 std::to_string(lt.arity) + ") with '" + rn +
                                 "' (arity " + std::to_string(rt.arity) + ")");
    out.push_back(TablePair{&lt, &rt});
  }
  return out;
}

// Relabel-invariant per-element fingerprint; equal fingerprints are a
// necessary condition for x -> y under any isomorphism.
using Fingerprint = std::vector<std::int64_t>;

void append_profile(Fingerprint& f, std::vector<int> counts) {
  std::sort(counts.begin(), counts.end(), std::greater<int>());
  for (int c : counts) f.push_back(c);
}

std::vector<Fingerprint> fingerprints(const Structure& s,
                                      const std::vector<const OpTable*>& ops) {
  const int n = s.order();
  std::vector<Fingerprint> fp(static_cast<std::size_t>(n));
  for (const OpTable* op : ops) {
    if (op->arity == 1) {
      std::vector<int> pre(static_cast<std::size_t>(n), 0);
      for (int y = 0; y < n; ++y) ++pre[static_cast<std::size_t>(op->at(y))];
      for (int x = 0; x < n; ++x) {
        fp[static_cast<std::size_t>(x)].push_back(op->at(x) == x);
        fp[static_cast<std::size_t>(x)].push_back(
            pre[static_cast<std::size_t>(x)]);
      }
    } else if (op->arity == 2) {
      for (int x = 0; x < n; ++x) {
        Fingerprint& f = fp[static_cast<std::size_t>(x)];
        f.push_back(op->at(x, x) == x);
        std::vector<int> row(static_cast<std::size_t>(n), 0);
        std::vector<int> col(static_cast<std::size_t>(n), 0);
        int lfix = 0, rfix = 0, labs = 0, rabs = 0;
        for (int y = 0; y < n; ++y) {
          ++row[static_cast<std::size_t>(op->at(x, y))];
          ++col[static_cast<std::size_t>(op->at(y, x))];
          if (op->at(x, y) == y) ++lfix;
          if (op->at(y, x) == y) ++rfix;
          if (op->at(x, y) == x) ++labs;
          if (op->at(y, x) == x) ++rabs;
        }
        append_profile(f, std::move(row));
        append_profile(f, std::move(col));
        f.push_back(lfix);
        f.push_back(rfix);
        f.push_back(labs);
        f.push_back(rabs);
        // squaring orbit: flags "x reappears after i squarings"
        int d = x;
        for (int i = 0; i < n; ++i) {
          d = op->at(d, d);
          f.push_back(d == x);
        }
      }
    } else {
      for (int x = 0; x < n; ++x) {
        Fingerprint& f = fp[static_cast<std::size_t>(x)];
        f.push_back(op->at(x, x, x) == x);
        int lat = 0, lu = 0, ru = 0;
        std::vector<int> s0(static_cast<std::size_t>(n), 0);
        std::vector<int> s1(static_cast<std::size_t>(n), 0);
        std::vector<int> s2(static_cast<std::size_t>(n), 0);
        for (int y = 0; y < n; ++y) {
          if (op->at(x, y, x) == y) ++lat;
          if (op->at(x, x, y) == y) ++lu;
          if (op->at(y, x, x) == y) ++ru;
          for (int z = 0; z < n; ++z) {
            ++s0[static_cast<std::size_t>(op->at(x, y, z))];
            ++s1[static_cast<std::size_t>(op->at(y, x, z))];
            ++s2[static_cast<std::size_t>(op->at(y, z, x))];
          }
        }
        f.push_back(lat);
        f.push_back(lu);
        f.push_back(ru);
        append_profile(f, std::move(s0));
        append_profile(f, std::move(s1));
        append_profile(f, std::move(s2));
        int d = x;
        for (int i = 0; i < n; ++i) {
          d = op->at(d, d, d);
          f.push_back(d == x);
        }
      }
    }
  }
  return fp;
}

// Constraint tuples grouped by the highest participating domain index, so a
// tuple is checked exactly when its last participant receives an image.
struct CheckTuple {
  int op;
  int a, b, c;  // b = -1 for unary, c = -1 for binary
};

std::vector<std::vector<CheckTuple>> build_triggers(
    const std::vector<TablePair>& tables, int n) {
  std::vector<std::vector<CheckTuple>> trig(static_cast<std::size_t>(n));
  for (std::size_t oi = 0; oi < tables.size(); ++oi) {
    const OpTable* t = tables[oi].left;
    if (t->arity == 1) {
      for (int a = 0; a < n; ++a) {
        int hi = std::max(a, t->at(a));
        trig[static_cast<std::size_t>(hi)].push_back(
            CheckTuple{static_cast<int>(oi), a, -1, -1});
      }
    } else if (t->arity == 2) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int hi = std::max({a, b, t->at(a, b)});
          trig[static_cast<std::size_t>(hi)].push_back(
              CheckTuple{static_cast<int>(oi), a, b, -1});
        }
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            int hi = std::max({a, b, c, t->at(a, b, c)});
            trig[static_cast<std::size_t>(hi)].push_back(
                CheckTuple{static_cast<int>(oi), a, b, c});
          }
    }
  }
  return trig;
}

bool tuple_holds(const CheckTuple& ct, const std::vector<TablePair>& tables,
                 const std::vector<int>& delta) {
  const OpTable* lt = tables[static_cast<std::size_t>(ct.op)].left;
  const OpTable* rt = tables[static_cast<std::size_t>(ct.op)].right;
  auto img = [&](int v) { return delta[static_cast<std::size_t>(v)]; };
  if (ct.b < 0) return img(lt->at(ct.a)) == rt->at(img(ct.a));
  if (ct.c < 0)
    return img(lt->at(ct.a, ct.b)) == rt->at(img(ct.a), img(ct.b));
  return img(lt->at(ct.a, ct.b, ct.c)) ==
         rt->at(img(ct.a), img(ct.b), img(ct.c));
}

// Depth-first over images in increasing order; visit returns true to stop.
template <typename Visit>
bool dfs_maps(int depth, int n, const std::vector<TablePair>& tables,
              const std::vector<std::vector<CheckTuple>>& triggers,
              const std::vector<Fingerprint>& lfp,
              const std::vector<Fingerprint>& rfp, std::vector<int>& delta,
              std::vector<char>& used, Visit&& visit) {
  if (depth == n) return visit(delta);
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (lfp[static_cast<std::size_t>(depth)] !=
        rfp[static_cast<std::size_t>(v)])
      continue;
    delta[static_cast<std::size_t>(depth)] = v;
    used[static_cast<std::size_t>(v)] = 1;
    bool ok = true;
    for (const CheckTuple& ct : triggers[static_cast<std::size_t>(depth)])
      if (!tuple_holds(ct, tables, delta)) {
        ok = false;
        break;
      }
    if (ok && dfs_maps(depth + 1, n, tables, triggers, lfp, rfp, delta, used,
                       visit))
      return true;
    used[static_cast<std::size_t>(v)] = 0;
  }
  delta[static_cast<std::size_t>(depth)] = -1;
  return false;
}

template <typename Visit>
void run_search(const IsoTask& task, Visit&& visit) {
  if (task.left->order() != task.right->order()) return;
  const int n = task.left->order();
  std::vector<TablePair> tables = resolve_tables(task);
  std::vector<const OpTable*> lops, rops;
  for (const TablePair& tp : tables) {
    lops.push_back(tp.left);
    rops.push_back(tp.right);
  }
  std::vector<Fingerprint> lfp = fingerprints(*task.left, lops);
  std::vector<Fingerprint> rfp = fingerprints(*task.right, rops);

  // multiset of fingerprints must agree
  std::vector<Fingerprint> ls = lfp, rs = rfp;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  if (ls != rs) return;

  std::vector<std::vector<CheckTuple>> triggers = build_triggers(tables, n);
  std::vector<int> delta(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  dfs_maps(0, n, tables, triggers, lfp, rfp, delta, used, visit);
}

}  // namespace

bool verify_morphism(const IsoTask& task, const Bijection& delta) {
  const int n = task.left->order();
  if (task.right->order() != n ||
      static_cast<int>(delta.forward.size()) != n)
    return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : delta.forward) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  auto img = [&](int v) { return delta.forward[static_cast<std::size_t>(v)]; };
  for (const TablePair& tp : resolve_tables(task)) {
    if (tp.left->arity == 1) {
      for (int a = 0; a < n; ++a)
        if (img(tp.left->at(a)) != tp.right->at(img(a))) return false;
    } else if (tp.left->arity == 2) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (img(tp.left->at(a, b)) != tp.right->at(img(a), img(b)))
            return false;
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (img(tp.left->at(a, b, c)) !=
                tp.right->at(img(a), img(b), img(c)))
              return false;
    }
  }
  return true;
}

std::optional<Bijection> iso_search(const IsoTask& task) {
  std::optional<Bijection> found;
  run_search(task, [&](const std::vector<int>& delta) {
    found = Bijection{delta};
    return true;
  });
  if (found && !verify_morphism(task, *found))
    fail("internal", "isomorphism candidate failed re-verification");
  return found;
}

std::vector<Bijection> automorphisms(const Structure& s,
                                     const std::vector<std::string>& op_names,
                                     const std::optional<Clause>& constraint,
                                     const Binding& binding) {
  IsoTask task;
  task.left = &s;
  task.right = &s;
  for (const std::string& name : op_names) task.op_pairs.emplace_back(name, name);

  // Constraint maps are checked against a copy of s extended with the
  // candidate as a unary table bound to the ' symbol.
  Structure ext;
  Binding ext_binding = binding;
  std::string cand_name;
  if (constraint) {
    ext = s;
    cand_name = "cand";
    while (ext.find_op(cand_name)) cand_name += "_";
    ext.ops[cand_name] = OpTable::filled(1, s.order(), 0);
    ext_binding.prime = cand_name;
  }

  std::vector<Bijection> out;
  run_search(task, [&](const std::vector<int>& delta) {
    if (constraint) {
      OpTable& cand = ext.ops[cand_name];
      for (int i = 0; i < s.order(); ++i)
        cand.cell(i) = delta[static_cast<std::size_t>(i)];
      if (!check_clause(ext, *constraint, ext_binding).holds) return false;
    }
    out.push_back(Bijection{delta});
    return false;
  });
  return out;
}

}  // namespace finalg
