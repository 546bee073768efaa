// Finite-dimensional unital associative algebras given by structure constants.
// Elements are coordinate vectors over the algebra's field; the multiplication
// table is stored sparsely since crossed-product tables are mostly zeros.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcp/group.hpp"
#include "pcp/matrix.hpp"
#include "pcp/report.hpp"

namespace pcp {

using SparseVec = std::vector<std::pair<size_t, Scalar>>;

inline SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

inline Vec to_dense(const SparseVec& s, size_t n, const FieldSpec& f) {
  Vec v = zero_vec(n, f);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

class StructureAlgebra {
 public:
  FieldSpec field = FieldSpec::rationals();
  size_t dim = 0;
  std::vector<std::string> basis_names;
  Vec unit;                                      // coordinates of 1
  std::vector<std::vector<SparseVec>> table;     // table[i][j] = coords of b_i b_j

  static StructureAlgebra make(const FieldSpec& f, size_t dim,
                               std::vector<std::string> names, Vec unit,
                               const std::vector<std::vector<Vec>>& dense_table) {
    StructureAlgebra a;
    a.field = f;
    a.dim = dim;
    if (names.empty())
      for (size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    if (names.size() != dim) fail("basis name count != dim");
    a.basis_names = std::move(names);
    if (unit.size() != dim) fail("unit coordinate length != dim");
    a.unit = std::move(unit);
    if (dense_table.size() != dim) fail("structure table has wrong shape");
    a.table.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
      if (dense_table[i].size() != dim) fail("structure table has wrong shape");
      a.table[i].resize(dim);
      for (size_t j = 0; j < dim; ++j) {
        if (dense_table[i][j].size() != dim) fail("structure table entry has wrong length");
        for (const auto& x : dense_table[i][j])
          if (x.field() != f) fail("mixed FieldSpec entries in structure table");
        a.table[i][j] = to_sparse(dense_table[i][j]);
      }
    }
    return a;
  }

  Vec basis_product(size_t i, size_t j) const { return to_dense(table[i][j], dim, field); }

  Vec mul(const Vec& a, const Vec& b) const {
    if (a.size() != dim || b.size() != dim) fail("element length mismatch");
    Vec r = zero_vec(dim, field);
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        for (const auto& [k, x] : table[i][j]) r[k] += c * x;
      }
    }
    return r;
  }

  Vec pow(const Vec& a, size_t e) const {
    Vec r = unit;
    for (size_t k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  /// Matrix of x -> a x.
  ExactMatrix left_mult(const Vec& a) const {
    ExactMatrix m(dim, dim, field);
    for (size_t j = 0; j < dim; ++j) {
      for (size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& [k, x] : table[i][j]) m.at(k, j) += a[i] * x;
      }
    }
    return m;
  }

  /// Matrix of x -> x a.
  ExactMatrix right_mult(const Vec& a) const {
    ExactMatrix m(dim, dim, field);
    for (size_t i = 0; i < dim; ++i) {
      for (size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (const auto& [k, x] : table[i][j]) m.at(k, i) += a[j] * x;
      }
    }
    return m;
  }

  bool is_idempotent(const Vec& a) const { return vec_eq(mul(a, a), a); }

  bool is_central(const Vec& a) const {
    for (size_t j = 0; j < dim; ++j) {
      Vec bj = unit_vec(dim, j, field);
      if (!vec_eq(mul(a, bj), mul(bj, a))) return false;
    }
    return true;
  }

  std::string describe(const Vec& a) const {
    std::string s;
    for (size_t i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += a[i].str() + "*" + basis_names[i];
    }
    return s.empty() ? "0" : s;
  }
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

/// Element bound to its parent algebra; arithmetic checks the binding.
struct AlgebraElement {
  AlgebraPtr parent;
  Vec coords;

  AlgebraElement operator*(const AlgebraElement& o) const {
    if (parent.get() != o.parent.get()) fail("parent algebra mismatch");
    return {parent, parent->mul(coords, o.coords)};
  }
  AlgebraElement operator+(const AlgebraElement& o) const {
    if (parent.get() != o.parent.get()) fail("parent algebra mismatch");
    return {parent, vec_add(coords, o.coords)};
  }
  bool operator==(const AlgebraElement& o) const {
    return parent.get() == o.parent.get() && vec_eq(coords, o.coords);
  }
};

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

inline ValidationReport validate_algebra(const StructureAlgebra& a) {
  ValidationReport rep;
  if (a.unit.size() != a.dim) {
    rep.add("shape", "unit length != dim");
    return rep;
  }
  // two-sided unit
  for (size_t i = 0; i < a.dim; ++i) {
    Vec bi = unit_vec(a.dim, i, a.field);
    if (!vec_eq(a.mul(a.unit, bi), bi))
      rep.add("unit-left", a.basis_names[i]);
    if (!vec_eq(a.mul(bi, a.unit), bi))
      rep.add("unit-right", a.basis_names[i]);
  }
  // associativity on all basis triples
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Vec ij = a.basis_product(i, j);
      for (size_t k = 0; k < a.dim; ++k) {
        Vec bk = unit_vec(a.dim, k, a.field);
        Vec lhs = a.mul(ij, bk);
        Vec rhs = a.mul(unit_vec(a.dim, i, a.field), a.basis_product(j, k));
        if (!vec_eq(lhs, rhs)) {
          rep.add("associativity", "(" + a.basis_names[i] + "," + a.basis_names[j] + "," +
                                       a.basis_names[k] + ")");
          if (rep.issues.size() > 8) return rep;
        }
      }
    }
  return rep;
}

/// Basis of the center {z : zb = bz for every basis b}.
inline std::vector<Vec> center(const StructureAlgebra& a) {
  if (a.dim == 0) return {};
  ExactMatrix stacked(0, a.dim, a.field);
  bool first = true;
  for (size_t k = 0; k < a.dim; ++k) {
    Vec bk = unit_vec(a.dim, k, a.field);
    ExactMatrix diff = a.right_mult(bk) - a.left_mult(bk);
    stacked = first ? diff : vstack(stacked, diff);
    first = false;
  }
  auto ker = kernel_basis(stacked);
  return span_of(ker, a.dim, a.field).basis;
}

inline bool radical_field_supported(const StructureAlgebra& a) {
  return a.field.is_rationals() || a.field.p > a.dim;
}

/// Jacobson radical as the kernel of the left-multiplication trace form.
/// Valid over Q, and over GF(p) only when p > dim; refuses otherwise.
inline std::vector<Vec> jacobson_radical(const StructureAlgebra& a) {
  if (!radical_field_supported(a))
    fail("jacobson_radical: trace-form criterion requires characteristic 0 or p > dim (" +
         a.field.str() + ", dim " + std::to_string(a.dim) + ")");
  if (a.dim == 0) return {};
  // t[l] = trace of left multiplication by b_l
  Vec t = zero_vec(a.dim, a.field);
  for (size_t l = 0; l < a.dim; ++l) {
    for (size_t j = 0; j < a.dim; ++j)
      for (const auto& [k, x] : a.table[l][j])
        if (k == j) t[l] += x;
  }
  // K[i][j] = trace(L_{b_i b_j})
  ExactMatrix gram(a.dim, a.dim, a.field);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j)
      for (const auto& [l, x] : a.table[i][j])
        if (!t[l].is_zero()) gram.at(i, j) += x * t[l];
  auto ker = kernel_basis(gram.transpose());
  return span_of(ker, a.dim, a.field).basis;
}

inline bool is_semisimple(const StructureAlgebra& a) { return jacobson_radical(a).empty(); }

/// Independent radical oracle for small algebras over small prime fields:
/// enumerates every element and keeps those whose two-sided ideal is
/// nilpotent. Exponential in dim; guarded accordingly.
inline std::vector<Vec> radical_brute_force(const StructureAlgebra& a, size_t max_elements = 65536) {
  if (a.field.is_rationals()) fail("radical_brute_force requires a finite field");
  double count = 1;
  for (size_t i = 0; i < a.dim; ++i) {
    count *= static_cast<double>(a.field.p);
    if (count > static_cast<double>(max_elements))
      fail("radical_brute_force: element count exceeds guard");
  }
  auto ideal_of = [&](const Vec& x) {
    std::vector<Vec> gens;
    for (size_t i = 0; i < a.dim; ++i) {
      Vec bi_x = a.mul(unit_vec(a.dim, i, a.field), x);
      for (size_t j = 0; j < a.dim; ++j)
        gens.push_back(a.mul(bi_x, unit_vec(a.dim, j, a.field)));
    }
    return span_of(gens, a.dim, a.field);
  };
  auto ideal_nilpotent = [&](const Subspace& ideal) {
    Subspace power = ideal;
    for (size_t k = 0; k + 1 < a.dim + 2; ++k) {
      if (power.dim() == 0) return true;
      std::vector<Vec> gens;
      for (const auto& u : power.basis)
        for (const auto& v : ideal.basis) gens.push_back(a.mul(u, v));
      Subspace next = span_of(gens, a.dim, a.field);
      if (next.dim() == power.dim()) return next.dim() == 0;
      power = next;
    }
    return power.dim() == 0;
  };
  std::vector<Vec> members;
  std::vector<size_t> digits(a.dim, 0);
  while (true) {
    Vec x = zero_vec(a.dim, a.field);
    for (size_t i = 0; i < a.dim; ++i)
      x[i] = Scalar::from_long(static_cast<long>(digits[i]), a.field);
    if (!is_zero_vec(x) && ideal_nilpotent(ideal_of(x))) members.push_back(x);
    size_t i = 0;
    for (; i < a.dim; ++i) {
      if (++digits[i] < a.field.p) break;
      digits[i] = 0;
    }
    if (i == a.dim) break;
  }
  return span_of(members, a.dim, a.field).basis;
}

/// Two-sided ideal generated by a central idempotent: the column space of
/// right multiplication, returned as a canonical rref basis.
inline Subspace idempotent_ideal(const StructureAlgebra& a, const Vec& gen) {
  if (!a.is_idempotent(gen)) fail("ideal generator is not idempotent");
  if (!a.is_central(gen)) fail("ideal generator is not central");
  std::vector<Vec> rows;
  for (size_t i = 0; i < a.dim; ++i)
    rows.push_back(a.mul(unit_vec(a.dim, i, a.field), gen));
  return span_of(rows, a.dim, a.field);
}

struct QuotientResult {
  StructureAlgebra algebra;
  ExactMatrix projection;              // (dim/I) x dim, the quotient map on coords
  std::vector<size_t> section_indices; // parent basis indices mapped onto the new basis
  Subspace ideal;
};

/// Quotient by the span of `ideal_gens`, which must be a two-sided ideal.
/// The complement basis is the set of non-pivot coordinates of the ideal's
/// rref basis, so outputs are deterministic.
inline QuotientResult quotient(const StructureAlgebra& a, const std::vector<Vec>& ideal_gens) {
  Subspace ideal = span_of(ideal_gens, a.dim, a.field);
  for (const auto& v : ideal.basis)
    for (size_t i = 0; i < a.dim; ++i) {
      Vec bi = unit_vec(a.dim, i, a.field);
      Vec left = a.mul(bi, v);
      if (!contains(ideal, left))
        fail("not a two-sided ideal: " + a.basis_names[i] + " * (" + a.describe(v) +
             ") escapes the span");
      Vec right = a.mul(v, bi);
      if (!contains(ideal, right))
        fail("not a two-sided ideal: (" + a.describe(v) + ") * " + a.basis_names[i] +
             " escapes the span");
    }
  std::vector<bool> is_pivot(a.dim, false);
  for (size_t c : ideal.pivots) is_pivot[c] = true;
  std::vector<size_t> comp;
  for (size_t c = 0; c < a.dim; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  size_t q = comp.size();

  ExactMatrix proj(q, a.dim, a.field);
  for (size_t c = 0; c < a.dim; ++c) {
    Vec reduced = reduce_mod(ideal, unit_vec(a.dim, c, a.field));
    for (size_t r = 0; r < q; ++r) proj.at(r, c) = reduced[comp[r]];
  }
  auto project = [&](const Vec& v) { return proj.apply(v); };

  std::vector<std::vector<Vec>> tbl(q, std::vector<Vec>(q));
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j)
      tbl[i][j] = project(a.basis_product(comp[i], comp[j]));
  std::vector<std::string> names;
  for (size_t c : comp) names.push_back(a.basis_names[c] + "~");
  StructureAlgebra qa = StructureAlgebra::make(a.field, q, names, project(a.unit), tbl);
  return {std::move(qa), std::move(proj), std::move(comp), std::move(ideal)};
}

inline StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (a.field != b.field) fail("field mismatch in direct sum");
  size_t n = a.dim + b.dim;
  std::vector<std::string> names;
  for (const auto& s : a.basis_names) names.push_back(s + ".L");
  for (const auto& s : b.basis_names) names.push_back(s + ".R");
  Vec unit = zero_vec(n, a.field);
  for (size_t i = 0; i < a.dim; ++i) unit[i] = a.unit[i];
  for (size_t i = 0; i < b.dim; ++i) unit[a.dim + i] = b.unit[i];
  std::vector<std::vector<Vec>> tbl(n, std::vector<Vec>(n, zero_vec(n, a.field)));
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Vec p = a.basis_product(i, j);
      for (size_t k = 0; k < a.dim; ++k) tbl[i][j][k] = p[k];
    }
  for (size_t i = 0; i < b.dim; ++i)
    for (size_t j = 0; j < b.dim; ++j) {
      Vec p = b.basis_product(i, j);
      for (size_t k = 0; k < b.dim; ++k) tbl[a.dim + i][a.dim + j][a.dim + k] = p[k];
    }
  return StructureAlgebra::make(a.field, n, names, unit, tbl);
}

// --- stock algebras -------------------------------------------------------

inline StructureAlgebra field_algebra(const FieldSpec& f, const std::string& name = "1") {
  std::vector<std::vector<Vec>> tbl{{Vec{Scalar::one(f)}}};
  return StructureAlgebra::make(f, 1, {name}, Vec{Scalar::one(f)}, tbl);
}

/// K^n as a product of fields; basis elements are orthogonal idempotents.
inline StructureAlgebra product_of_fields(const FieldSpec& f, size_t n) {
  StructureAlgebra a = field_algebra(f, "e0");
  for (size_t i = 1; i < n; ++i) a = direct_sum(a, field_algebra(f, "e" + std::to_string(i)));
  a.basis_names.clear();
  for (size_t i = 0; i < n; ++i) a.basis_names.push_back("e" + std::to_string(i));
  return a;
}

/// Full matrix algebra M_n(K) on the basis E_{ij}, row-major.
inline StructureAlgebra matrix_algebra(const FieldSpec& f, size_t n) {
  size_t d = n * n;
  auto idx = [n](size_t i, size_t j) { return i * n + j; };
  std::vector<std::string> names(d);
  Vec unit = zero_vec(d, f);
  std::vector<std::vector<Vec>> tbl(d, std::vector<Vec>(d, zero_vec(d, f)));
  for (size_t i = 0; i < n; ++i) {
    unit[idx(i, i)] = Scalar::one(f);
    for (size_t j = 0; j < n; ++j) {
      names[idx(i, j)] = "E" + std::to_string(i) + std::to_string(j);
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l)
          if (j == k) tbl[idx(i, j)][idx(k, l)][idx(i, l)] = Scalar::one(f);
    }
  }
  return StructureAlgebra::make(f, d, names, unit, tbl);
}

/// K[x]/(x^2): basis {1, x}.
inline StructureAlgebra dual_numbers(const FieldSpec& f) {
  std::vector<std::vector<Vec>> tbl(2, std::vector<Vec>(2, zero_vec(2, f)));
  tbl[0][0][0] = Scalar::one(f);
  tbl[0][1][1] = Scalar::one(f);
  tbl[1][0][1] = Scalar::one(f);
  Vec unit = zero_vec(2, f);
  unit[0] = Scalar::one(f);
  return StructureAlgebra::make(f, 2, {"1", "x"}, unit, tbl);
}

/// Upper triangular 2x2 matrices, basis {E11, E12, E22}.
inline StructureAlgebra upper_triangular2(const FieldSpec& f) {
  std::vector<std::vector<Vec>> tbl(3, std::vector<Vec>(3, zero_vec(3, f)));
  auto one = Scalar::one(f);
  tbl[0][0][0] = one;  // E11 E11 = E11
  tbl[0][1][1] = one;  // E11 E12 = E12
  tbl[1][2][1] = one;  // E12 E22 = E12
  tbl[2][2][2] = one;  // E22 E22 = E22
  Vec unit = zero_vec(3, f);
  unit[0] = one;
  unit[2] = one;
  return StructureAlgebra::make(f, 3, {"E11", "E12", "E22"}, unit, tbl);
}

/// Group algebra K[G] of a finite table group.
inline StructureAlgebra group_algebra(const FieldSpec& f, const GroupModel& g) {
  if (!g.is_finite()) fail("group algebra requires a finite group");
  size_t n = g.order();
  std::vector<std::vector<Vec>> tbl(n, std::vector<Vec>(n, zero_vec(n, f)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      tbl[i][j][static_cast<size_t>(g.table[i][j])] = Scalar::one(f);
  Vec unit = zero_vec(n, f);
  unit[static_cast<size_t>(g.identity_index)] = Scalar::one(f);
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back("u[" + g.labels[i] + "]");
  return StructureAlgebra::make(f, n, names, unit, tbl);
}

// --- corner subalgebra ----------------------------------------------------

/// The ideal D = R e of a central idempotent e, viewed as a unital algebra
/// with identity e. `embed` maps D-coordinates to R-coordinates.
struct CornerAlgebra {
  StructureAlgebra algebra;
  Subspace space;        // D inside R
  ExactMatrix embed;     // dim(R) x dim(D)
  Vec unit_in_parent;    // e

  Vec to_parent(const Vec& v) const { return embed.apply(v); }

  Vec from_parent(const Vec& v) const {
    auto c = coords_in(space, v);
    if (!c) fail("element does not lie in the corner ideal");
    return *c;
  }
};

inline CornerAlgebra corner_algebra(const StructureAlgebra& a, const Vec& central_idem) {
  Subspace sp = idempotent_ideal(a, central_idem);
  size_t k = sp.dim();
  ExactMatrix embed(a.dim, k, a.field);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < a.dim; ++i) embed.at(i, j) = sp.basis[j][i];
  std::vector<std::vector<Vec>> tbl(k, std::vector<Vec>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Vec p = a.mul(sp.basis[i], sp.basis[j]);
      auto c = coords_in(sp, p);
      if (!c) fail("corner ideal is not multiplicatively closed");
      tbl[i][j] = *c;
    }
  auto unit_coords = coords_in(sp, central_idem);
  if (!unit_coords) fail("idempotent does not lie in its own ideal");
  std::vector<std::string> names;
  for (size_t j = 0; j < k; ++j) names.push_back("d" + std::to_string(j));
  CornerAlgebra c;
  c.algebra = StructureAlgebra::make(a.field, k, names, *unit_coords, tbl);
  c.space = std::move(sp);
  c.embed = std::move(embed);
  c.unit_in_parent = central_idem;
  return c;
}

/// Inverse of w inside the corner ideal with identity `corner_unit`, when it
/// exists: the unique x in the ideal with w x = x w = corner_unit.
inline std::optional<Vec> corner_inverse(const StructureAlgebra& a, const Vec& w,
                                         const Vec& corner_unit) {
  Subspace sp = idempotent_ideal(a, corner_unit);
  size_t k = sp.dim();
  if (k == 0) return is_zero_vec(w) ? std::optional<Vec>(zero_vec(a.dim, a.field)) : std::nullopt;
  ExactMatrix m(a.dim, k, a.field);
  for (size_t j = 0; j < k; ++j) {
    Vec col = a.mul(w, sp.basis[j]);
    for (size_t i = 0; i < a.dim; ++i) m.at(i, j) = col[i];
  }
  auto sol = solve(m, corner_unit);
  if (!sol) return std::nullopt;
  Vec x = zero_vec(a.dim, a.field);
  for (size_t j = 0; j < k; ++j) vec_axpy(x, (*sol)[j], sp.basis[j]);
  if (!vec_eq(a.mul(x, w), corner_unit)) return std::nullopt;
  return x;
}

}  // namespace pcp
