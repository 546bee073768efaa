// The partial crossed product: finitely supported elements sum_g a_g d_g with
// a_g in D_g and product (a_g d_g)(b_h d_h) = alpha_g(alpha_g^{-1}(a_g) b_h)
// w_{g,h} d_{gh}; an explicit structure-constant algebra when the support is
// finite; splitting along a subgroup and the Maschke averaging map.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcp/action.hpp"

namespace pcp {

/// Finitely supported crossed-product element: g -> a_g with a_g in D_g and
/// no stored zero values.
class CrossedElement {
 public:
  std::map<GElem, Vec> parts;

  static CrossedElement zero() { return {}; }

  static CrossedElement term(const TwistedPartialAction& a, GElem g, const Vec& coeff) {
    Vec clipped = a.R().mul(coeff, a.one(g));
    if (!vec_eq(clipped, coeff))
      fail("coefficient at " + a.group.label(g) + " is not inside D_" + a.group.label(g));
    CrossedElement x;
    if (!is_zero_vec(coeff)) x.parts[g] = coeff;
    return x;
  }

  bool is_zero() const { return parts.empty(); }

  std::vector<GElem> support() const {
    std::vector<GElem> s;
    for (const auto& [g, v] : parts) s.push_back(g);
    return s;
  }

  void add_part(GElem g, const Vec& v) {
    auto it = parts.find(g);
    if (it == parts.end()) {
      if (!is_zero_vec(v)) parts[g] = v;
      return;
    }
    it->second = vec_add(it->second, v);
    if (is_zero_vec(it->second)) parts.erase(it);
  }

  bool operator==(const CrossedElement& o) const {
    if (parts.size() != o.parts.size()) return false;
    for (const auto& [g, v] : parts) {
      auto it = o.parts.find(g);
      if (it == o.parts.end() || !vec_eq(v, it->second)) return false;
    }
    return true;
  }
};

inline CrossedElement cross_add(const CrossedElement& x, const CrossedElement& y) {
  CrossedElement r = x;
  for (const auto& [g, v] : y.parts) r.add_part(g, v);
  return r;
}

/// The multiplication rule, extended bilinearly over the supports. Products
/// of finitely supported elements stay finitely supported.
inline CrossedElement cross_multiply(const TwistedPartialAction& a, const CrossedElement& x,
                                     const CrossedElement& y) {
  const StructureAlgebra& R = a.R();
  CrossedElement r;
  for (const auto& [g, ag] : x.parts)
    for (const auto& [h, bh] : y.parts) {
      GElem gh = a.group.op(g, h);
      if (!a.in_support(gh)) continue;  // the rule lands in D_g D_{gh} = 0 there
      Vec inner = R.mul(a.apply_inverse(g, ag), bh);
      Vec coeff = R.mul(a.apply(g, inner), a.twist_of(g, h));
      r.add_part(gh, coeff);
    }
  return r;
}

inline CrossedElement cross_unit(const TwistedPartialAction& a) {
  return CrossedElement::term(a, a.group.identity(), a.R().unit);
}

/// Explicit structure-constant form of R *_{alpha,w} G for finite support.
/// Basis: for each supported g in order, the rref basis of D_g, tagged d_g.
class CrossedProduct {
 public:
  TwistedPartialAction action;
  StructureAlgebra algebra;             // the crossed product as an algebra
  std::vector<std::pair<GElem, size_t>> basis_tags;  // (g, index into D_g basis)
  std::map<GElem, Subspace> ideal_bases;

  size_t dim() const { return algebra.dim; }

  /// Coordinates of a crossed element in the product basis.
  Vec coords_of(const CrossedElement& x) const {
    Vec v = zero_vec(basis_tags.size(), action.R().field);
    for (const auto& [g, part] : x.parts) {
      auto it = ideal_bases.find(g);
      if (it == ideal_bases.end()) fail("element supported outside the action support");
      auto c = coords_in(it->second, part);
      if (!c) fail("part at " + action.group.label(g) + " is not inside D_g");
      size_t offset = offset_of(g);
      for (size_t j = 0; j < c->size(); ++j) v[offset + j] = (*c)[j];
    }
    return v;
  }

  CrossedElement element_of(const Vec& v) const {
    CrossedElement x;
    for (size_t k = 0; k < basis_tags.size(); ++k) {
      if (v[k].is_zero()) continue;
      const auto& [g, j] = basis_tags[k];
      x.add_part(g, vec_scale(v[k], ideal_bases.at(g).basis[j]));
    }
    return x;
  }

  size_t offset_of(GElem g) const {
    for (size_t k = 0; k < basis_tags.size(); ++k)
      if (basis_tags[k].first == g) return k;
    fail("group element not in the crossed-product basis");
  }
};

/// Build the crossed product as an explicit algebra. The action must be
/// finitely supported (always true for finite groups and for the stored Z
/// representation).
inline CrossedProduct build_crossed(const TwistedPartialAction& a) {
  const StructureAlgebra& R = a.R();
  CrossedProduct cp;
  cp.action = a;

  std::vector<std::pair<GElem, size_t>> tags;
  for (GElem g : a.support) {
    Subspace sp = a.ideal_of(g);
    for (size_t j = 0; j < sp.dim(); ++j) tags.emplace_back(g, j);
    cp.ideal_bases[g] = std::move(sp);
  }
  size_t n = tags.size();
  cp.basis_tags = tags;

  std::vector<std::string> names(n);
  for (size_t k = 0; k < n; ++k) {
    const auto& [g, j] = tags[k];
    names[k] = R.describe(cp.ideal_bases.at(g).basis[j]) + " d[" + a.group.label(g) + "]";
  }

  std::vector<std::vector<Vec>> tbl(n, std::vector<Vec>(n, zero_vec(n, R.field)));
  for (size_t k1 = 0; k1 < n; ++k1) {
    const auto& [g, j1] = tags[k1];
    CrossedElement x = CrossedElement::term(a, g, cp.ideal_bases.at(g).basis[j1]);
    for (size_t k2 = 0; k2 < n; ++k2) {
      const auto& [h, j2] = tags[k2];
      CrossedElement y = CrossedElement::term(a, h, cp.ideal_bases.at(h).basis[j2]);
      CrossedElement p = cross_multiply(a, x, y);
      Vec coords = zero_vec(n, R.field);
      for (const auto& [t, part] : p.parts) {
        auto c = coords_in(cp.ideal_bases.at(t), part);
        if (!c) fail("product escapes the ideal basis (invalid action?)");
        size_t off = cp.offset_of(t);
        for (size_t j = 0; j < c->size(); ++j) coords[off + j] = (*c)[j];
      }
      tbl[k1][k2] = std::move(coords);
    }
  }
  cp.algebra = StructureAlgebra::make(R.field, n, names, cp.coords_of(cross_unit(a)), tbl);
  return cp;
}

/// Split along a subgroup: x = (part supported in H) + (part in G-H).
inline std::pair<CrossedElement, CrossedElement> subgroup_projection(
    const TwistedPartialAction& a, const CrossedElement& x, const std::vector<GElem>& H) {
  if (!is_subgroup(a.group, H)) fail("H is not a subgroup");
  std::set<GElem> hs(H.begin(), H.end());
  CrossedElement in_h, in_a;
  for (const auto& [g, v] : x.parts) {
    if (hs.count(g))
      in_h.add_part(g, v);
    else
      in_a.add_part(g, v);
  }
  return {in_h, in_a};
}

inline std::pair<CrossedElement, CrossedElement> subgroup_projection_z(
    const TwistedPartialAction& a, const CrossedElement& x, GElem stride) {
  if (a.group.is_finite()) fail("use subgroup_projection for finite groups");
  if (stride <= 0) fail("subgroup stride must be positive");
  CrossedElement in_h, in_a;
  for (const auto& [g, v] : x.parts) {
    if (g % stride == 0)
      in_h.add_part(g, v);
    else
      in_a.add_part(g, v);
  }
  return {in_h, in_a};
}

// ---------------------------------------------------------------------------
// Maschke averaging

/// A module for the crossed product: one matrix per crossed-product basis
/// element, acting on K^m.
struct ModuleRep {
  const CrossedProduct* cp = nullptr;
  size_t m = 0;
  std::vector<ExactMatrix> rho;  // indexed like cp->basis_tags

  ExactMatrix act(const Vec& cp_coords) const {
    ExactMatrix r(m, m, cp->algebra.field);
    for (size_t k = 0; k < rho.size(); ++k)
      if (!cp_coords[k].is_zero()) r = r + rho[k].scaled(cp_coords[k]);
    return r;
  }
};

/// Left regular representation of the crossed product on itself.
inline ModuleRep regular_representation(const CrossedProduct& cp) {
  ModuleRep rep;
  rep.cp = &cp;
  rep.m = cp.dim();
  for (size_t k = 0; k < cp.dim(); ++k)
    rep.rho.push_back(cp.algebra.left_mult(unit_vec(cp.dim(), k, cp.algebra.field)));
  return rep;
}

struct MaschkeResult {
  ExactMatrix psi;          // the averaged projection
  ValidationReport checks;  // identity on N, idempotence onto N, equivariance
};

/// The averaging operator Psi(v) = 1/|G| sum_g w^{-1}_{g^-1,g} 1_{g^-1}
/// d_{g^-1} pi(1_g d_g v), for pi an R-linear projection of the module onto a
/// submodule N. Postconditions are checked exactly and reported.
inline MaschkeResult maschke_average(const TwistedPartialAction& a, const ModuleRep& rep,
                                     const ExactMatrix& pi) {
  const StructureAlgebra& R = a.R();
  if (!a.group.is_finite()) fail("Maschke averaging requires a finite group");
  size_t order = a.group.order();
  Scalar inv_order = Scalar::from_long(static_cast<long>(order), R.field);
  if (inv_order.is_zero()) fail("|G| is not invertible in the base field");
  inv_order = inv_order.inverse();

  const CrossedProduct& cp = *rep.cp;
  ExactMatrix psi(rep.m, rep.m, R.field);
  for (GElem g : a.support) {
    GElem ginv = a.group.inv(g);
    // w^{-1}_{g^-1,g} lives in the corner D_{g^-1} D_e = D_{g^-1}
    Vec w = a.twist_of(ginv, g);
    auto winv = corner_inverse(R, w, R.mul(a.one(ginv), a.one(a.group.identity())));
    if (!winv) fail("twist w_{g^-1,g} is not invertible");
    ExactMatrix left = rep.act(cp.coords_of(CrossedElement::term(a, ginv, *winv)));
    ExactMatrix right = rep.act(cp.coords_of(CrossedElement::term(a, g, a.one(g))));
    psi = psi + left * pi * right;
  }
  psi = psi.scaled(inv_order);

  MaschkeResult out{psi, {}};
  // N = image of pi
  std::vector<Vec> n_gens;
  for (size_t j = 0; j < rep.m; ++j) n_gens.push_back(pi.col(j));
  Subspace N = span_of(n_gens, rep.m, R.field);
  for (const auto& v : N.basis)
    if (!vec_eq(psi.apply(v), v)) {
      out.checks.add("psi-fixes-N", "Psi(v) != v for v in N");
      break;
    }
  for (size_t j = 0; j < rep.m; ++j)
    if (!contains(N, psi.col(j))) {
      out.checks.add("psi-into-N", "column " + std::to_string(j) + " escapes N");
      break;
    }
  if (psi * psi != psi) out.checks.add("psi-idempotent", "Psi^2 != Psi");
  for (size_t k = 0; k < cp.dim(); ++k) {
    const ExactMatrix& m = rep.rho[k];
    if (m * psi != psi * m) {
      out.checks.add("psi-equivariant",
                     "Psi does not commute with " + cp.algebra.basis_names[k]);
      break;
    }
  }
  return out;
}

}  // namespace pcp
