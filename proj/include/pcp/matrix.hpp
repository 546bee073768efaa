// Dense exact matrices over a FieldSpec: reduced row echelon form, kernel,
// solve, determinant, inverse, and the subspace utilities built on rref.

#pragma once

#include <optional>
#include <vector>

#include "pcp/field.hpp"

namespace pcp {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(size_t n, const FieldSpec& f) { return Vec(n, Scalar::zero(f)); }

inline Vec unit_vec(size_t n, size_t i, const FieldSpec& f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = c * x;
  return r;
}

// r += c * a, skipping zero work
inline void vec_axpy(Vec& r, const Scalar& c, const Vec& a) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) r[i] += c * a[i];
}

inline bool vec_eq(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), field_(FieldSpec::rationals()) {}

  ExactMatrix(size_t rows, size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), field_(f), a_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(size_t n, const FieldSpec& f) {
    ExactMatrix m(n, n, f);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static ExactMatrix from_rows(const std::vector<Vec>& rows, size_t cols, const FieldSpec& f) {
    ExactMatrix m(rows.size(), cols, f);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail("row length mismatch");
      for (size_t j = 0; j < cols; ++j) {
        if (rows[i][j].field() != f) fail("mixed FieldSpec entries");
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  Vec row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

  Vec col(size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  void set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) fail("row length mismatch");
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
      if (a_[k] != o.a_[k]) return false;
    return true;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    check_shape(o);
    ExactMatrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) r.a_[k] += o.a_[k];
    return r;
  }

  ExactMatrix operator-(const ExactMatrix& o) const {
    check_shape(o);
    ExactMatrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k)
      if (!o.a_[k].is_zero()) r.a_[k] -= o.a_[k];
    return r;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) fail("matrix shape mismatch in product");
    if (field_ != o.field_) fail("field mismatch in matrix product");
    ExactMatrix r(rows_, o.cols_, field_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Scalar& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          if (!o.at(k, j).is_zero()) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) fail("vector length mismatch in apply");
    Vec r = zero_vec(rows_, field_);
    for (size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (size_t i = 0; i < rows_; ++i)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    }
    return r;
  }

  ExactMatrix transpose() const {
    ExactMatrix r(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  ExactMatrix scaled(const Scalar& c) const {
    ExactMatrix r = *this;
    for (auto& x : r.a_) x = c * x;
    return r;
  }

  Scalar trace() const {
    if (rows_ != cols_) fail("trace of non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

 private:
  void check_shape(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("matrix shape mismatch");
    if (field_ != o.field_) fail("field mismatch");
  }

  size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

// stack b below a
inline ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) fail("vstack column mismatch");
  ExactMatrix r(a.rows() + b.rows(), a.cols(), a.field());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

struct RrefResult {
  ExactMatrix reduced;
  std::vector<size_t> pivots;  // pivot column per pivot row
  size_t rank = 0;
};

inline RrefResult rref(const ExactMatrix& m) {
  RrefResult out{m, {}, 0};
  ExactMatrix& a = out.reduced;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t piv = r;
    while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

inline size_t rank(const ExactMatrix& m) { return rref(m).rank; }

/// Basis of the right null space {x : m x = 0}.
inline std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(m.cols(), m.field());
    v[c] = Scalar::one(m.field());
    for (size_t r = 0; r < rr.pivots.size(); ++r)
      v[rr.pivots[r]] = -rr.reduced.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = rhs, or nullopt when inconsistent.
/// Deterministic choice: free variables are set to zero.
inline std::optional<Vec> solve(const ExactMatrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) fail("rhs length mismatch in solve");
  ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  RrefResult rr = rref(aug);
  // inconsistent iff some pivot lands in the rhs column
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols(), m.field());
  for (size_t r = 0; r < rr.pivots.size(); ++r)
    x[rr.pivots[r]] = rr.reduced.at(r, m.cols());
  return x;
}

inline Scalar det(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail("determinant of non-square matrix");
  ExactMatrix a = m;
  size_t n = a.rows();
  Scalar d = Scalar::one(m.field());
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a.at(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    Scalar inv = a.at(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c) * inv;
      for (size_t j = c; j < n; ++j)
        if (!a.at(c, j).is_zero()) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) fail("inverse of non-square matrix");
  size_t n = m.rows();
  ExactMatrix aug(n, 2 * n, m.field());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n, m.field());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspaces of K^n, always kept as canonical rref row bases so that equality
// of subspaces is equality of representations.

struct Subspace {
  std::vector<Vec> basis;  // rref rows, nonzero
  std::vector<size_t> pivots;
  size_t ambient = 0;
  FieldSpec field = FieldSpec::rationals();

  size_t dim() const { return basis.size(); }

  bool operator==(const Subspace& o) const {
    if (ambient != o.ambient || basis.size() != o.basis.size()) return false;
    for (size_t i = 0; i < basis.size(); ++i)
      if (!vec_eq(basis[i], o.basis[i])) return false;
    return true;
  }
};

inline Subspace span_of(const std::vector<Vec>& gens, size_t ambient, const FieldSpec& f) {
  Subspace s;
  s.ambient = ambient;
  s.field = f;
  if (gens.empty()) return s;
  RrefResult rr = rref(ExactMatrix::from_rows(gens, ambient, f));
  for (size_t r = 0; r < rr.rank; ++r) s.basis.push_back(rr.reduced.row(r));
  s.pivots = rr.pivots;
  return s;
}

/// Reduce v against the rref basis; the result is zero iff v lies in the span.
inline Vec reduce_mod(const Subspace& s, const Vec& v) {
  Vec r = v;
  for (size_t k = 0; k < s.basis.size(); ++k) {
    const Scalar& c = r[s.pivots[k]];
    if (!c.is_zero()) {
      Scalar f = c;
      for (size_t j = 0; j < r.size(); ++j)
        if (!s.basis[k][j].is_zero()) r[j] -= f * s.basis[k][j];
    }
  }
  return r;
}

inline bool contains(const Subspace& s, const Vec& v) { return is_zero_vec(reduce_mod(s, v)); }

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
  for (const auto& v : a.basis)
    if (!contains(b, v)) return false;
  return true;
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens = a.basis;
  gens.insert(gens.end(), b.basis.begin(), b.basis.end());
  return span_of(gens, a.ambient, a.field);
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) fail("ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return span_of({}, a.ambient, a.field);
  // x = A^T s = B^T t; solve [A^T | -B^T] (s,t) = 0
  size_t ka = a.dim(), kb = b.dim();
  ExactMatrix m(a.ambient, ka + kb, a.field);
  for (size_t j = 0; j < ka; ++j)
    for (size_t i = 0; i < a.ambient; ++i) m.at(i, j) = a.basis[j][i];
  for (size_t j = 0; j < kb; ++j)
    for (size_t i = 0; i < a.ambient; ++i) m.at(i, ka + j) = -b.basis[j][i];
  std::vector<Vec> gens;
  for (const auto& st : kernel_basis(m)) {
    Vec x = zero_vec(a.ambient, a.field);
    for (size_t j = 0; j < ka; ++j) vec_axpy(x, st[j], a.basis[j]);
    gens.push_back(std::move(x));
  }
  return span_of(gens, a.ambient, a.field);
}

/// Coordinates of v in the rref basis of s; nullopt if v is outside.
inline std::optional<Vec> coords_in(const Subspace& s, const Vec& v) {
  Vec c = zero_vec(s.basis.size(), s.field);
  Vec r = v;
  for (size_t k = 0; k < s.basis.size(); ++k) {
    const Scalar& x = r[s.pivots[k]];
    if (!x.is_zero()) {
      c[k] = x;
      Scalar f = x;
      for (size_t j = 0; j < r.size(); ++j)
        if (!s.basis[k][j].is_zero()) r[j] -= f * s.basis[k][j];
    }
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return c;
}

}  // namespace pcp
