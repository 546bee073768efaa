// Enveloping (global) actions. For an untwisted partial action of a finite
// group the enveloping action is constructed inside the function algebra
// F(G,R) = R^G: phi(r)|_g = alpha_g(r 1_{g^-1}), beta_t(f)|_g = f(g t), and
// T = sum_g beta_g(phi(R)). Twisted pairs are not constructed, only verified.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcp/action.hpp"

namespace pcp {

/// A subalgebra presented on a canonical basis of a spanning set, with the
/// unit found by solving; refuses spans that are not closed or not unital.
struct SpanSubalgebra {
  StructureAlgebra algebra;
  Subspace space;      // inside the parent
  ExactMatrix embed;   // parent_dim x dim

  Vec to_parent(const Vec& v) const { return embed.apply(v); }
  Vec from_parent(const Vec& v) const {
    auto c = coords_in(space, v);
    if (!c) fail("vector is outside the subalgebra span");
    return *c;
  }
};

inline SpanSubalgebra subalgebra_on_span(const StructureAlgebra& parent,
                                         const std::vector<Vec>& gens,
                                         const std::string& what) {
  Subspace sp = span_of(gens, parent.dim, parent.field);
  size_t k = sp.dim();
  std::vector<std::vector<Vec>> tbl(k, std::vector<Vec>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Vec p = parent.mul(sp.basis[i], sp.basis[j]);
      auto c = coords_in(sp, p);
      if (!c) fail(what + ": span is not closed under multiplication");
      tbl[i][j] = *c;
    }
  // unit: u with u b_i = b_i u = b_i for all i
  ExactMatrix lhs(2 * k * k, k, parent.field);
  Vec rhs = zero_vec(2 * k * k, parent.field);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      // sum_c u_c (b_c b_i)_j = (b_i)_j in subalgebra coords
      for (size_t c = 0; c < k; ++c) {
        lhs.at(i * k + j, c) = tbl[c][i][j];
        lhs.at(k * k + i * k + j, c) = tbl[i][c][j];
      }
      Scalar delta = (i == j) ? Scalar::one(parent.field) : Scalar::zero(parent.field);
      rhs[i * k + j] = delta;
      rhs[k * k + i * k + j] = delta;
    }
  auto unit = (k == 0) ? std::optional<Vec>(Vec{}) : solve(lhs, rhs);
  if (!unit) fail(what + ": subalgebra has no identity element");
  std::vector<std::string> names;
  for (size_t i = 0; i < k; ++i) names.push_back("t" + std::to_string(i));
  SpanSubalgebra out;
  out.algebra = StructureAlgebra::make(parent.field, k, names, *unit, tbl);
  out.space = sp;
  out.embed = ExactMatrix(parent.dim, k, parent.field);
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < parent.dim; ++i) out.embed.at(i, j) = sp.basis[j][i];
  return out;
}

struct EnvelopingPair {
  TwistedPartialAction partial;  // on R
  GlobalAction global;           // on T
  ExactMatrix embedding;         // dim(T) x dim(R): the monomorphism R -> T
};

/// Check the enveloping-pair conditions exactly on bases; twisted pairs are
/// fully supported. For integer-group pairs, translates are probed over
/// |g| <= z_window (default: dim T + largest support magnitude).
inline ValidationReport verify_enveloping(const EnvelopingPair& pair, size_t z_window = 0) {
  ValidationReport rep;
  const StructureAlgebra& R = pair.partial.R();
  const StructureAlgebra& T = pair.global.T();
  const GroupModel& G = pair.partial.group;
  const ExactMatrix& phi = pair.embedding;

  if (phi.rows() != T.dim || phi.cols() != R.dim) {
    rep.add("embedding", "embedding matrix has wrong shape");
    return rep;
  }
  // phi injective multiplicative map
  if (rank(phi) != R.dim) rep.add("embedding", "phi is not injective");
  for (size_t i = 0; i < R.dim; ++i)
    for (size_t j = 0; j < R.dim; ++j) {
      Vec lhs = phi.apply(R.basis_product(i, j));
      Vec rhs = T.mul(phi.col(i), phi.col(j));
      if (!vec_eq(lhs, rhs)) {
        rep.add("embedding", "phi not multiplicative at (" + R.basis_names[i] + "," +
                                 R.basis_names[j] + ")");
        i = R.dim;
        break;
      }
    }

  std::vector<Vec> phi_cols;
  for (size_t j = 0; j < R.dim; ++j) phi_cols.push_back(phi.col(j));
  Subspace phiR = span_of(phi_cols, T.dim, T.field);

  // (i') phi(R) is an ideal of T
  for (size_t i = 0; i < T.dim && rep.issues.size() < 32; ++i) {
    Vec ti = unit_vec(T.dim, i, T.field);
    for (const auto& v : phiR.basis) {
      if (!contains(phiR, T.mul(ti, v)) || !contains(phiR, T.mul(v, ti))) {
        rep.add("i'", "phi(R) not an ideal: witness " + T.basis_names[i]);
        break;
      }
    }
  }

  std::vector<GElem> probe;
  if (G.is_finite()) {
    probe = G.elements();
  } else {
    GElem m = 0;
    for (GElem g : pair.partial.support) m = std::max(m, g < 0 ? -g : g);
    GElem w = z_window > 0 ? static_cast<GElem>(z_window) : m + static_cast<GElem>(T.dim);
    for (GElem g = -w; g <= w; ++g) probe.push_back(g);
  }

  // (ii') T = sum_g beta_g(phi(R))
  {
    std::vector<Vec> gens;
    for (GElem g : probe) {
      ExactMatrix bg = pair.global.beta_of(g);
      for (const auto& v : phiR.basis) gens.push_back(bg.apply(v));
    }
    Subspace total = span_of(gens, T.dim, T.field);
    if (total.dim() != T.dim)
      rep.add("ii'", "sum of translates spans dim " + std::to_string(total.dim()) + " of " +
                         std::to_string(T.dim));
  }

  // (iii') phi(D_g) = phi(R) cap beta_g(phi(R))
  for (GElem g : probe) {
    ExactMatrix bg = pair.global.beta_of(g);
    std::vector<Vec> tr;
    for (const auto& v : phiR.basis) tr.push_back(bg.apply(v));
    Subspace rhs = subspace_intersect(phiR, span_of(tr, T.dim, T.field));
    std::vector<Vec> dg;
    for (const auto& v : pair.partial.ideal_of(g).basis) dg.push_back(phi.apply(v));
    Subspace lhs = span_of(dg, T.dim, T.field);
    if (!(lhs == rhs)) {
      rep.add("iii'", "phi(D_g) != phi(R) cap beta_g(phi(R)) at g=" + G.label(g));
      if (rep.issues.size() > 32) return rep;
    }
  }

  // (iv') phi(alpha_g(x)) = beta_g(phi(x)) on D_{g^-1}
  for (GElem g : pair.partial.support) {
    ExactMatrix bg = pair.global.beta_of(g);
    for (const auto& x : pair.partial.ideal_of(G.inv(g)).basis) {
      Vec lhs = phi.apply(pair.partial.apply(g, x));
      Vec rhs = bg.apply(phi.apply(x));
      if (!vec_eq(lhs, rhs)) {
        rep.add("iv'", "phi(alpha_g(x)) != beta_g(phi(x)) at g=" + G.label(g));
        break;
      }
    }
  }

  // (v') phi(a w_{g,h}) = phi(a) u_{g,h} and phi(w_{g,h} a) = u_{g,h} phi(a)
  for (GElem g : pair.partial.support)
    for (GElem h : pair.partial.support) {
      GElem gh = G.op(g, h);
      if (!pair.partial.in_support(gh)) continue;
      Vec w = pair.partial.twist_of(g, h);
      Vec u = pair.global.u_of(g, h);
      Subspace corner = subspace_intersect(pair.partial.ideal_of(g), pair.partial.ideal_of(gh));
      for (const auto& x : corner.basis) {
        Vec lhs1 = phi.apply(R.mul(x, w));
        Vec rhs1 = T.mul(phi.apply(x), u);
        Vec lhs2 = phi.apply(R.mul(w, x));
        Vec rhs2 = T.mul(u, phi.apply(x));
        if (!vec_eq(lhs1, rhs1) || !vec_eq(lhs2, rhs2)) {
          rep.add("v'", "twist compatibility fails at (g,h)=(" + G.label(g) + "," + G.label(h) +
                            ")");
          break;
        }
      }
      if (rep.issues.size() > 32) return rep;
    }

  return rep;
}

struct GlobalizeResult {
  EnvelopingPair pair;
  ValidationReport checks;  // the enveloping-condition transcript
  Vec t_identity;           // identity of T (exists: finite groups are finite type)
};

/// Construct the enveloping action of an untwisted partial action of a finite
/// group inside F(G,R), and verify the conditions on the result.
inline GlobalizeResult globalize(const TwistedPartialAction& a) {
  if (!a.group.is_finite())
    fail("globalize requires a finite group (infinite translate families are"
         " out of engine scope)");
  if (a.has_nontrivial_twist())
    fail("globalize constructs untwisted envelopes only; twisted pairs are"
         " verified when supplied");
  const StructureAlgebra& R = a.R();
  const GroupModel& G = a.group;
  size_t n = G.order(), d = R.dim;
  size_t fd = n * d;

  // F(G,R): |G| pointwise copies of R
  std::vector<std::vector<Vec>> ftbl(fd, std::vector<Vec>(fd, zero_vec(fd, R.field)));
  for (size_t b = 0; b < n; ++b)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Vec p = R.basis_product(i, j);
        for (size_t k = 0; k < d; ++k) ftbl[b * d + i][b * d + j][b * d + k] = p[k];
      }
  Vec funit = zero_vec(fd, R.field);
  for (size_t b = 0; b < n; ++b)
    for (size_t k = 0; k < d; ++k) funit[b * d + k] = R.unit[k];
  std::vector<std::string> fnames(fd);
  for (size_t b = 0; b < n; ++b)
    for (size_t k = 0; k < d; ++k)
      fnames[b * d + k] = R.basis_names[k] + "@" + G.label(static_cast<GElem>(b));
  StructureAlgebra F = StructureAlgebra::make(R.field, fd, fnames, funit, ftbl);

  // phi(r)|_g = alpha_g(r 1_{g^-1}); beta_t(f)|_g = f(g t)
  ExactMatrix phi_to_f(fd, d, R.field);
  for (GElem g : G.elements()) {
    for (size_t j = 0; j < d; ++j) {
      Vec img = a.apply(g, unit_vec(d, j, R.field));
      for (size_t i = 0; i < d; ++i)
        phi_to_f.at(static_cast<size_t>(g) * d + i, j) = img[i];
    }
  }
  auto beta_on_f = [&](GElem t) {
    ExactMatrix m(fd, fd, R.field);
    for (GElem g : G.elements()) {
      size_t src = static_cast<size_t>(G.op(g, t));
      for (size_t k = 0; k < d; ++k)
        m.at(static_cast<size_t>(g) * d + k, src * d + k) = Scalar::one(R.field);
    }
    return m;
  };

  // T = sum_g beta_g(phi(R))
  std::vector<Vec> gens;
  for (GElem g : G.elements()) {
    ExactMatrix bg = beta_on_f(g);
    for (size_t j = 0; j < d; ++j) gens.push_back(bg.apply(phi_to_f.col(j)));
  }
  SpanSubalgebra Tsub = subalgebra_on_span(F, gens, "enveloping algebra T");
  auto T = std::make_shared<StructureAlgebra>(Tsub.algebra);

  GlobalAction global;
  global.algebra = T;
  global.group = G;
  for (GElem g : G.elements()) {
    ExactMatrix bg = beta_on_f(g);
    ExactMatrix restricted(T->dim, T->dim, R.field);
    for (size_t j = 0; j < T->dim; ++j) {
      Vec img = Tsub.from_parent(bg.apply(Tsub.to_parent(unit_vec(T->dim, j, R.field))));
      for (size_t i = 0; i < T->dim; ++i) restricted.at(i, j) = img[i];
    }
    global.beta.emplace(g, std::move(restricted));
  }

  ExactMatrix embedding(T->dim, d, R.field);
  for (size_t j = 0; j < d; ++j) {
    Vec img = Tsub.from_parent(phi_to_f.col(j));
    for (size_t i = 0; i < T->dim; ++i) embedding.at(i, j) = img[i];
  }

  GlobalizeResult out{EnvelopingPair{a, std::move(global), std::move(embedding)}, {}, T->unit};
  out.checks = verify_enveloping(out.pair);
  return out;
}

/// Round trip: restricting the constructed global action to phi(1_R) must
/// reproduce the original action after aligning the corner basis with phi.
inline ValidationReport verify_globalization_round_trip(const TwistedPartialAction& a,
                                                        const GlobalizeResult& gr) {
  ValidationReport rep;
  const StructureAlgebra& R = a.R();
  Vec one_T = gr.pair.embedding.apply(R.unit);
  Restriction back = restrict_global(gr.pair.global, one_T);
  const TwistedPartialAction& b = back.action;

  if (b.support.size() != a.support.size()) {
    rep.add("round-trip", "support size differs");
    return rep;
  }
  for (size_t k = 0; k < a.support.size(); ++k)
    if (a.support[k] != b.support[k]) {
      rep.add("round-trip", "support differs at position " + std::to_string(k));
      return rep;
    }

  // change of basis: corner coordinates of phi(R basis)
  ExactMatrix c(b.dim(), a.dim(), R.field);
  for (size_t j = 0; j < a.dim(); ++j) {
    Vec img = back.corner.from_parent(gr.pair.embedding.col(j));
    for (size_t i = 0; i < b.dim(); ++i) c.at(i, j) = img[i];
  }
  auto cinv = inverse(c);
  if (!cinv) {
    rep.add("round-trip", "base alignment is not invertible");
    return rep;
  }
  for (GElem g : a.support) {
    if (!vec_eq(c.apply(a.one(g)), b.one(g)))
      rep.add("round-trip", "1_g differs at g=" + a.group.label(g));
    if (c * a.alpha.at(g) != b.alpha.at(g) * c)
      rep.add("round-trip", "alpha_g differs at g=" + a.group.label(g));
    if (rep.issues.size() > 16) return rep;
  }
  return rep;
}

}  // namespace pcp
