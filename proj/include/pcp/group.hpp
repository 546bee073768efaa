// Group models: finite groups as multiplication tables, and the infinite
// cyclic group Z handled symbolically. Elements are GElem values; for a
// table group that is the row/column index, for Z it is the integer itself.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pcp/report.hpp"
#include "pcp/field.hpp"

namespace pcp {

using GElem = long long;

enum class GroupKind { FiniteTable, IntegerGroup };

class GroupModel {
 public:
  GroupKind kind = GroupKind::FiniteTable;

  // FiniteTable data
  std::vector<std::vector<int>> table;  // table[i][j] = index of g_i * g_j
  int identity_index = 0;
  std::vector<std::string> labels;

  static GroupModel integers() {
    GroupModel g;
    g.kind = GroupKind::IntegerGroup;
    return g;
  }

  static GroupModel from_table(std::vector<std::vector<int>> t, int identity,
                               std::vector<std::string> labels_ = {}) {
    GroupModel g;
    g.kind = GroupKind::FiniteTable;
    g.table = std::move(t);
    g.identity_index = identity;
    if (labels_.empty())
      for (size_t i = 0; i < g.table.size(); ++i) labels_.push_back("g" + std::to_string(i));
    g.labels = std::move(labels_);
    return g;
  }

  bool is_finite() const { return kind == GroupKind::FiniteTable; }
  size_t order() const { return is_finite() ? table.size() : 0; }

  GElem identity() const { return is_finite() ? identity_index : 0; }

  GElem op(GElem a, GElem b) const {
    if (!is_finite()) return a + b;
    return table[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  GElem inv(GElem a) const {
    if (!is_finite()) return -a;
    for (size_t b = 0; b < table.size(); ++b)
      if (table[static_cast<size_t>(a)][b] == identity_index &&
          table[b][static_cast<size_t>(a)] == identity_index)
        return static_cast<GElem>(b);
    fail("element " + label(a) + " has no two-sided inverse");
  }

  std::vector<GElem> elements() const {
    if (!is_finite()) fail("cannot enumerate the integer group");
    std::vector<GElem> v(table.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<GElem>(i);
    return v;
  }

  std::string label(GElem a) const {
    if (!is_finite()) return std::to_string(a);
    return labels[static_cast<size_t>(a)];
  }
};

/// Cyclic group of order n; generator is element 1.
inline GroupModel make_cyclic(size_t n) {
  if (n == 0) fail("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>((i + j) % n);
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  return GroupModel::from_table(std::move(t), 0, std::move(labels));
}

/// Symmetric group on n letters, n <= 4, with permutations ordered
/// lexicographically by one-line notation.
inline GroupModel make_symmetric(size_t n) {
  if (n == 0 || n > 4) fail("symmetric group supported only for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    for (size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == q) return static_cast<int>(i);
    fail("permutation lookup failed");
  };
  size_t m = perms.size();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      // composition: (p_i p_j)(x) = p_i(p_j(x))
      std::vector<int> q(n);
      for (size_t x = 0; x < n; ++x) q[x] = perms[i][static_cast<size_t>(perms[j][x])];
      t[i][j] = index_of(q);
    }
  std::vector<std::string> labels;
  for (const auto& perm : perms) {
    std::string s = "[";
    for (int x : perm) s += std::to_string(x);
    s += "]";
    labels.push_back(s);
  }
  return GroupModel::from_table(std::move(t), 0, std::move(labels));
}

inline GroupModel direct_product(const GroupModel& a, const GroupModel& b) {
  if (!a.is_finite() || !b.is_finite()) fail("direct product requires finite groups");
  size_t n = a.order(), m = b.order();
  auto idx = [m](size_t i, size_t j) { return static_cast<int>(i * m + j); };
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  std::vector<std::string> labels(n * m);
  for (size_t i1 = 0; i1 < n; ++i1)
    for (size_t j1 = 0; j1 < m; ++j1) {
      labels[static_cast<size_t>(idx(i1, j1))] = "(" + a.labels[i1] + "," + b.labels[j1] + ")";
      for (size_t i2 = 0; i2 < n; ++i2)
        for (size_t j2 = 0; j2 < m; ++j2)
          t[static_cast<size_t>(idx(i1, j1))][static_cast<size_t>(idx(i2, j2))] =
              idx(static_cast<size_t>(a.table[i1][i2]), static_cast<size_t>(b.table[j1][j2]));
    }
  return GroupModel::from_table(std::move(t), idx(static_cast<size_t>(a.identity_index),
                                                  static_cast<size_t>(b.identity_index)),
                                std::move(labels));
}

inline ValidationReport validate_group(const GroupModel& g) {
  ValidationReport rep;
  if (!g.is_finite()) return rep;  // Z is always valid
  size_t n = g.order();
  if (n == 0) {
    rep.add("nonempty", "empty multiplication table");
    return rep;
  }
  if (g.labels.size() != n) rep.add("labels", "label count != order");
  for (size_t i = 0; i < n; ++i) {
    if (g.table[i].size() != n) {
      rep.add("shape", "row " + std::to_string(i) + " has wrong length");
      return rep;
    }
    for (size_t j = 0; j < n; ++j)
      if (g.table[i][j] < 0 || g.table[i][j] >= static_cast<int>(n)) {
        rep.add("range", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
        return rep;
      }
  }
  // Latin square
  for (size_t i = 0; i < n; ++i) {
    std::set<int> row(g.table[i].begin(), g.table[i].end());
    if (row.size() != n) rep.add("latin-row", "row " + g.label(static_cast<GElem>(i)));
    std::set<int> col;
    for (size_t k = 0; k < n; ++k) col.insert(g.table[k][i]);
    if (col.size() != n) rep.add("latin-col", "column " + g.label(static_cast<GElem>(i)));
  }
  // identity
  size_t e = static_cast<size_t>(g.identity_index);
  if (e >= n) {
    rep.add("identity", "identity index out of range");
    return rep;
  }
  for (size_t i = 0; i < n; ++i)
    if (g.table[e][i] != static_cast<int>(i) || g.table[i][e] != static_cast<int>(i))
      rep.add("identity", "e * " + g.label(static_cast<GElem>(i)) + " != " +
                              g.label(static_cast<GElem>(i)));
  // inverses
  for (size_t i = 0; i < n; ++i) {
    bool found = false;
    for (size_t j = 0; j < n; ++j)
      if (g.table[i][j] == static_cast<int>(e) && g.table[j][i] == static_cast<int>(e))
        found = true;
    if (!found) rep.add("inverse", "no two-sided inverse for " + g.label(static_cast<GElem>(i)));
  }
  // full associativity sweep; desk scale keeps n small
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) {
        int lhs = g.table[static_cast<size_t>(g.table[a][b])][c];
        int rhs = g.table[a][static_cast<size_t>(g.table[b][c])];
        if (lhs != rhs) {
          rep.add("associativity",
                  "(" + g.label(static_cast<GElem>(a)) + "," + g.label(static_cast<GElem>(b)) +
                      "," + g.label(static_cast<GElem>(c)) + ")");
          return rep;
        }
      }
  return rep;
}

/// Subgroup generated by gens, as a sorted element list. FiniteTable only;
/// subgroups of Z are handled symbolically (as dZ) by callers.
inline std::vector<GElem> subgroup_closure(const GroupModel& g, const std::vector<GElem>& gens) {
  if (!g.is_finite()) fail("subgroup_closure is not supported for the integer group");
  std::set<GElem> h{g.identity()};
  std::vector<GElem> work(h.begin(), h.end());
  std::set<GElem> seed(gens.begin(), gens.end());
  for (GElem x : seed)
    if (h.insert(x).second) work.push_back(x);
  while (!work.empty()) {
    GElem x = work.back();
    work.pop_back();
    std::vector<GElem> next;
    for (GElem y : h) {
      next.push_back(g.op(x, y));
      next.push_back(g.op(y, x));
    }
    next.push_back(g.inv(x));
    for (GElem z : next)
      if (h.insert(z).second) work.push_back(z);
  }
  return std::vector<GElem>(h.begin(), h.end());
}

/// Every subgroup of a finite table group, each as a sorted element list.
inline std::vector<std::vector<GElem>> all_subgroups(const GroupModel& g) {
  if (!g.is_finite()) fail("subgroup enumeration requires a finite group");
  std::set<std::vector<GElem>> found;
  found.insert({g.identity()});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<GElem>> snapshot(found.begin(), found.end());
    for (const auto& h : snapshot)
      for (GElem x : g.elements()) {
        std::vector<GElem> gens = h;
        gens.push_back(x);
        auto closed = subgroup_closure(g, gens);
        if (found.insert(closed).second) grew = true;
      }
  }
  return std::vector<std::vector<GElem>>(found.begin(), found.end());
}

inline bool is_subgroup(const GroupModel& g, const std::vector<GElem>& h) {
  if (!g.is_finite()) fail("is_subgroup requires a finite group");
  std::set<GElem> s(h.begin(), h.end());
  if (!s.count(g.identity())) return false;
  for (GElem a : s) {
    if (!s.count(g.inv(a))) return false;
    for (GElem b : s)
      if (!s.count(g.op(a, b))) return false;
  }
  return true;
}

}  // namespace pcp
