// Frobenius and symmetric form search. A linear form lambda is a witness when
// its Gram matrix G_ij = lambda(b_i b_j) is nonsingular; det G is a polynomial
// of total degree <= n in lambda's coordinates, and we decide whether it
// vanishes identically by symbolic expansion (n <= 6), by deterministic grid
// evaluation when the grid is affordable, or by seeded sampling with a
// reported failure bound.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcp/algebra.hpp"
#include "pcp/rng.hpp"

namespace pcp {

struct LinearForm {
  Vec coords;  // lambda(x) = sum coords[i] * x[i]

  Scalar apply(const Vec& x) const {
    Scalar s = Scalar::zero(coords.empty() ? FieldSpec::rationals() : coords[0].field());
    for (size_t i = 0; i < coords.size(); ++i)
      if (!coords[i].is_zero() && !x[i].is_zero()) s += coords[i] * x[i];
    return s;
  }
};

namespace detail {

/// Sparse multivariate polynomial, exponent vector -> coefficient.
struct MultiPoly {
  size_t nvars = 0;
  FieldSpec field = FieldSpec::rationals();
  std::map<std::vector<uint8_t>, Scalar> terms;

  static MultiPoly zero(size_t nvars, const FieldSpec& f) { return {nvars, f, {}}; }

  static MultiPoly constant(const Scalar& c, size_t nvars) {
    MultiPoly p{nvars, c.field(), {}};
    if (!c.is_zero()) p.terms[std::vector<uint8_t>(nvars, 0)] = c;
    return p;
  }

  static MultiPoly variable(size_t q, const Scalar& coeff, size_t nvars) {
    MultiPoly p{nvars, coeff.field(), {}};
    if (!coeff.is_zero()) {
      std::vector<uint8_t> e(nvars, 0);
      e[q] = 1;
      p.terms[e] = coeff;
    }
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const std::vector<uint8_t>& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r = zero(nvars, field);
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<uint8_t> e(nvars);
        for (size_t i = 0; i < nvars; ++i) e[i] = static_cast<uint8_t>(e1[i] + e2[i]);
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  MultiPoly negate() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }

  /// Substitute variable q := value; the exponent slot collapses to zero.
  MultiPoly substitute(size_t q, const Scalar& value) const {
    MultiPoly r = zero(nvars, field);
    for (const auto& [e, c] : terms) {
      Scalar coeff = c;
      for (uint8_t k = 0; k < e[q]; ++k) coeff *= value;
      std::vector<uint8_t> e2 = e;
      e2[q] = 0;
      r.add_term(e2, coeff);
    }
    return r;
  }
};

/// det of a matrix of polynomials by Laplace expansion with subset memoization.
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& a, size_t n,
                          size_t nvars, const FieldSpec& f) {
  std::vector<MultiPoly> memo(static_cast<size_t>(1) << n);
  memo[0] = MultiPoly::constant(Scalar::one(f), nvars);
  std::vector<bool> computed(static_cast<size_t>(1) << n, false);
  computed[0] = true;
  // iterate masks in increasing popcount order via plain increasing order
  for (size_t mask = 1; mask < (static_cast<size_t>(1) << n); ++mask) {
    size_t r = static_cast<size_t>(__builtin_popcountll(mask));
    MultiPoly acc = MultiPoly::zero(nvars, f);
    size_t pos = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(mask & (static_cast<size_t>(1) << j))) continue;
      const MultiPoly& entry = a[r - 1][j];
      if (!entry.is_zero()) {
        MultiPoly sub = memo[mask ^ (static_cast<size_t>(1) << j)];
        MultiPoly term = entry * sub;
        if ((r - 1 + pos) % 2 == 1) term = term.negate();
        acc = acc + term;
      }
      ++pos;
    }
    memo[mask] = std::move(acc);
    computed[mask] = true;
  }
  return memo[(static_cast<size_t>(1) << n) - 1];
}

}  // namespace detail

struct FormSearch {
  std::optional<LinearForm> form;  // witness, if one exists / was found
  bool exact = true;               // is a negative answer exact?
  std::string method;              // "candidate", "symbolic", "grid", "randomized"
  std::string note;
};

namespace detail {

/// Gram matrix of lambda = sum_q t_q mu_q evaluated at a concrete point.
inline ExactMatrix gram_at(const StructureAlgebra& a, const std::vector<Vec>& mu, const Vec& t) {
  Vec lambda = zero_vec(a.dim, a.field);
  for (size_t q = 0; q < mu.size(); ++q) vec_axpy(lambda, t[q], mu[q]);
  ExactMatrix g(a.dim, a.dim, a.field);
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = 0; j < a.dim; ++j) {
      Scalar s = Scalar::zero(a.field);
      for (const auto& [l, x] : a.table[i][j])
        if (!lambda[l].is_zero()) s += x * lambda[l];
      g.at(i, j) = s;
    }
  return g;
}

inline Vec combine(const std::vector<Vec>& mu, const Vec& t, size_t dim, const FieldSpec& f) {
  Vec lambda = zero_vec(dim, f);
  for (size_t q = 0; q < mu.size(); ++q) vec_axpy(lambda, t[q], mu[q]);
  return lambda;
}

/// Search for t with det Gram(sum t_q mu_q) != 0, over the span of mu.
inline FormSearch search_nondegenerate(const StructureAlgebra& a, const std::vector<Vec>& mu,
                                       const std::vector<Vec>& candidates, uint64_t seed) {
  FormSearch out;
  size_t n = a.dim, k = mu.size();
  if (n == 0) {
    out.form = LinearForm{Vec{}};
    out.method = "trivial";
    return out;
  }
  if (k == 0) {
    out.method = "empty-search-space";
    return out;  // no candidate forms at all; exact none
  }

  // cheap exact candidates first (e.g. the trace form)
  for (const auto& t : candidates) {
    if (!det(gram_at(a, mu, t)).is_zero()) {
      out.form = LinearForm{combine(mu, t, n, a.field)};
      out.method = "candidate";
      return out;
    }
  }

  if (n <= 6) {
    // symbolic: entries of Gram are linear polynomials in t_0..t_{k-1}
    std::vector<std::vector<detail::MultiPoly>> g(
        n, std::vector<detail::MultiPoly>(n, detail::MultiPoly::zero(k, a.field)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        detail::MultiPoly entry = detail::MultiPoly::zero(k, a.field);
        for (const auto& [l, x] : a.table[i][j])
          for (size_t q = 0; q < k; ++q)
            if (!mu[q][l].is_zero())
              entry = entry + detail::MultiPoly::variable(q, x * mu[q][l], k);
        g[i][j] = std::move(entry);
      }
    detail::MultiPoly d = detail::poly_det(g, n, k, a.field);
    out.method = "symbolic";
    if (d.is_zero()) return out;  // exact: identically singular
    // greedy witness: per variable, at most deg+1 candidate values
    Vec t = zero_vec(k, a.field);
    detail::MultiPoly p = d;
    for (size_t q = 0; q < k; ++q) {
      for (long v = 0; v <= static_cast<long>(n); ++v) {
        detail::MultiPoly sub = p.substitute(q, Scalar::from_long(v, a.field));
        if (!sub.is_zero()) {
          t[q] = Scalar::from_long(v, a.field);
          p = std::move(sub);
          break;
        }
      }
    }
    out.form = LinearForm{combine(mu, t, n, a.field)};
    return out;
  }

  // deterministic grid when affordable: total degree <= n, so per-variable
  // degree <= n and a nonzero polynomial cannot vanish on {0..n}^k
  double grid = 1;
  for (size_t q = 0; q < k; ++q) {
    grid *= static_cast<double>(n + 1);
    if (grid > 20000) break;
  }
  if (grid <= 20000) {
    std::vector<size_t> digits(k, 0);
    while (true) {
      Vec t = zero_vec(k, a.field);
      for (size_t q = 0; q < k; ++q) t[q] = Scalar::from_long(static_cast<long>(digits[q]), a.field);
      if (!det(gram_at(a, mu, t)).is_zero()) {
        out.form = LinearForm{combine(mu, t, n, a.field)};
        out.method = "grid";
        return out;
      }
      size_t q = 0;
      for (; q < k; ++q) {
        if (++digits[q] <= n) break;
        digits[q] = 0;
      }
      if (q == k) break;
    }
    out.method = "grid";
    return out;  // exact: grid exhausted
  }

  // seeded sampling; misses a nonzero polynomial with probability <= (n/S)^T
  size_t sample_range = 4 * n;
  if (!a.field.is_rationals() && a.field.p < sample_range) sample_range = a.field.p;
  const size_t trials = 64;
  Rng rng(seed);
  for (size_t trial = 0; trial < trials; ++trial) {
    Vec t = zero_vec(k, a.field);
    for (size_t q = 0; q < k; ++q)
      t[q] = Scalar::from_long(static_cast<long>(rng.below(sample_range)), a.field);
    if (!det(gram_at(a, mu, t)).is_zero()) {
      out.form = LinearForm{combine(mu, t, n, a.field)};
      out.method = "randomized";
      return out;
    }
  }
  out.method = "randomized";
  out.exact = false;
  out.note = "no witness in " + std::to_string(trials) + " samples from [0," +
             std::to_string(sample_range) + ")^" + std::to_string(k) +
             "; a nonzero Gram determinant evades this with probability <= (" +
             std::to_string(n) + "/" + std::to_string(sample_range) + ")^" +
             std::to_string(trials) +
             (sample_range <= n ? " (vacuous over this small field)" : "");
  return out;
}

inline Vec trace_form_coords(const StructureAlgebra& a) {
  Vec t = zero_vec(a.dim, a.field);
  for (size_t l = 0; l < a.dim; ++l)
    for (size_t j = 0; j < a.dim; ++j)
      for (const auto& [k2, x] : a.table[l][j])
        if (k2 == j) t[l] += x;
  return t;
}

}  // namespace detail

/// A linear form with nonsingular Gram matrix, if one exists. The `exact`
/// flag is false only when the randomized fallback exhausted its samples.
inline FormSearch frobenius_form(const StructureAlgebra& a, uint64_t seed = 2024) {
  std::vector<Vec> mu;
  for (size_t q = 0; q < a.dim; ++q) mu.push_back(unit_vec(a.dim, q, a.field));
  std::vector<Vec> candidates;
  Vec tr = detail::trace_form_coords(a);
  if (!is_zero_vec(tr)) candidates.push_back(tr);
  candidates.push_back(Vec(a.dim, Scalar::one(a.field)));
  return detail::search_nondegenerate(a, mu, candidates, seed);
}

/// Same search restricted to forms vanishing on every commutator ab - ba.
inline FormSearch symmetric_form(const StructureAlgebra& a, uint64_t seed = 2024) {
  std::vector<Vec> comms;
  for (size_t i = 0; i < a.dim; ++i)
    for (size_t j = i + 1; j < a.dim; ++j)
      comms.push_back(vec_sub(a.basis_product(i, j), a.basis_product(j, i)));
  Subspace csp = span_of(comms, a.dim, a.field);
  std::vector<Vec> mu;
  if (csp.dim() == 0) {
    for (size_t q = 0; q < a.dim; ++q) mu.push_back(unit_vec(a.dim, q, a.field));
  } else {
    auto ker = kernel_basis(ExactMatrix::from_rows(csp.basis, a.dim, a.field));
    mu = span_of(ker, a.dim, a.field).basis;  // canonical, so coords_in applies
  }
  // candidate: trace form always kills commutators
  std::vector<Vec> candidates;
  Vec tr = detail::trace_form_coords(a);
  Subspace musp = span_of(mu, a.dim, a.field);
  if (!is_zero_vec(tr)) {
    auto c = coords_in(musp, tr);
    if (c) candidates.push_back(*c);
  }
  if (!mu.empty()) candidates.push_back(Vec(mu.size(), Scalar::one(a.field)));
  return detail::search_nondegenerate(a, mu, candidates, seed);
}

}  // namespace pcp
