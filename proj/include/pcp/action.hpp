// Unital twisted partial actions of a group on a structure-constant algebra,
// the axiom validator, and the constructions on actions: restriction of a
// global action to a central-idempotent ideal, subgroup restriction,
// invariant-ideal quotients, the partial fixed ring, finite-type detection.
//
// Conventions. The ideal D_g is generated by the central idempotent 1_g.
// alpha_g is stored as a full dim x dim matrix representing the linear map
// x -> alpha_g(x 1_{g^-1}); it must annihilate the complement of D_{g^-1} and
// land in D_g. The twist w_{g,h} defaults to 1_g 1_{gh} when absent.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcp/algebra.hpp"

namespace pcp {

class TwistedPartialAction {
 public:
  AlgebraPtr algebra;  // R
  GroupModel group;
  std::vector<GElem> support;                     // sorted, contains identity
  std::map<GElem, Vec> idem;                      // g -> 1_g
  std::map<GElem, ExactMatrix> alpha;             // g -> matrix of alpha_g
  std::map<std::pair<GElem, GElem>, Vec> twist;   // explicit w_{g,h} entries

  const StructureAlgebra& R() const { return *algebra; }
  size_t dim() const { return algebra->dim; }

  bool in_support(GElem g) const {
    for (GElem s : support)
      if (s == g) return true;
    return false;
  }

  Vec one(GElem g) const {
    auto it = idem.find(g);
    return it == idem.end() ? zero_vec(dim(), R().field) : it->second;
  }

  /// alpha_g(x 1_{g^-1}); the zero map off the support.
  Vec apply(GElem g, const Vec& x) const {
    auto it = alpha.find(g);
    if (it == alpha.end()) return zero_vec(dim(), R().field);
    return it->second.apply(x);
  }

  /// alpha_g^{-1}(x 1_g): the inverse of the restriction D_{g^-1} -> D_g.
  Vec apply_inverse(GElem g, const Vec& x) const {
    auto it = alpha.find(g);
    if (it == alpha.end()) return zero_vec(dim(), R().field);
    Vec target = R().mul(x, one(g));
    auto sol = solve(it->second, target);
    if (!sol) fail("alpha_" + group.label(g) + " is not surjective onto its ideal");
    return R().mul(*sol, one(group.inv(g)));
  }

  Vec twist_of(GElem g, GElem h) const {
    auto it = twist.find({g, h});
    if (it != twist.end()) return it->second;
    return R().mul(one(g), one(group.op(g, h)));
  }

  bool has_nontrivial_twist() const {
    for (const auto& [gh, w] : twist)
      if (!vec_eq(w, R().mul(one(gh.first), one(group.op(gh.first, gh.second))))) return true;
    return false;
  }

  Subspace ideal_of(GElem g) const {
    if (!in_support(g)) return span_of({}, dim(), R().field);
    return idempotent_ideal(R(), one(g));
  }
};

namespace detail {

/// Group elements to quantify over when validating: the whole group when it
/// is finite; otherwise the finite set of elements whose ideals can be
/// nonzero, derived from the support.
inline std::vector<GElem> probe_elements(const TwistedPartialAction& a) {
  if (a.group.is_finite()) return a.group.elements();
  std::set<GElem> s(a.support.begin(), a.support.end());
  for (GElem g : a.support)
    for (GElem h : a.support) {
      s.insert(a.group.op(g, h));
      s.insert(a.group.op(g, a.group.inv(h)));
    }
  return std::vector<GElem>(s.begin(), s.end());
}

}  // namespace detail

/// Exact check of every axiom of a unital twisted partial action; failures
/// are reported with witnesses rather than thrown.
inline ValidationReport validate_action(const TwistedPartialAction& a) {
  ValidationReport rep;
  const StructureAlgebra& R = a.R();
  const GroupModel& G = a.group;
  GElem e = G.identity();

  if (!a.in_support(e)) {
    rep.add("support", "identity not in support");
    return rep;
  }
  for (GElem g : a.support) {
    if (!a.idem.count(g) || !a.alpha.count(g)) {
      rep.add("data", "missing idempotent or alpha for " + G.label(g));
      return rep;
    }
  }

  // (i) 1_e = 1_R and alpha_e = id
  if (!vec_eq(a.one(e), R.unit)) rep.add("axiom-i", "1_e != 1_R");
  if (a.alpha.at(e) != ExactMatrix::identity(R.dim, R.field))
    rep.add("axiom-i", "alpha_e is not the identity map");

  // idempotents central, alpha_g a bijection D_{g^-1} -> D_g preserving
  // products and units
  std::map<GElem, Subspace> ideals;
  const Subspace empty_space = span_of({}, R.dim, R.field);
  for (GElem g : a.support)
    if (a.idem.count(g)) ideals[g] = a.ideal_of(g);
  auto ideal_at = [&](GElem g) -> const Subspace& {
    auto it = ideals.find(g);
    return it != ideals.end() ? it->second : empty_space;
  };

  for (GElem g : a.support) {
    const Vec& u = a.one(g);
    if (!R.is_idempotent(u)) rep.add("idempotent", "1_" + G.label(g) + " is not idempotent");
    if (!R.is_central(u)) rep.add("central", "1_" + G.label(g) + " is not central");
    if (g != e && is_zero_vec(u)) rep.add("support", "D_" + G.label(g) + " is zero but listed");
    if (!a.in_support(G.inv(g))) {
      rep.add("support", "support not closed under inverse at " + G.label(g));
      continue;
    }
    const ExactMatrix& m = a.alpha.at(g);
    const Subspace& dom = ideal_at(G.inv(g));
    const Subspace& cod = ideal_at(g);
    // annihilation convention: alpha_g(x) = alpha_g(x 1_{g^-1})
    ExactMatrix proj = R.right_mult(a.one(G.inv(g)));
    if (m * proj != m)
      rep.add("convention", "alpha_" + G.label(g) + " does not annihilate the complement of D_" +
                                G.label(G.inv(g)));
    // image inside D_g and bijectivity onto it
    std::vector<Vec> images;
    for (const auto& v : dom.basis) images.push_back(m.apply(v));
    Subspace img = span_of(images, R.dim, R.field);
    if (!(img == cod))
      rep.add("bijection", "alpha_" + G.label(g) + "(D_" + G.label(G.inv(g)) + ") != D_" +
                               G.label(g));
    if (img.dim() != dom.dim())
      rep.add("bijection", "alpha_" + G.label(g) + " is not injective on D_" + G.label(G.inv(g)));
    // multiplicativity on the domain ideal
    for (size_t i = 0; i < dom.dim() && rep.issues.size() < 32; ++i)
      for (size_t j = 0; j < dom.dim(); ++j) {
        Vec lhs = m.apply(R.mul(dom.basis[i], dom.basis[j]));
        Vec rhs = R.mul(m.apply(dom.basis[i]), m.apply(dom.basis[j]));
        if (!vec_eq(lhs, rhs)) {
          rep.add("multiplicative", "alpha_" + G.label(g) + " at basis pair (" +
                                        R.describe(dom.basis[i]) + ", " +
                                        R.describe(dom.basis[j]) + ")");
          break;
        }
      }
    if (!vec_eq(m.apply(a.one(G.inv(g))), a.one(g)))
      rep.add("unit-map", "alpha_" + G.label(g) + "(1_" + G.label(G.inv(g)) + ") != 1_" +
                              G.label(g));
  }

  std::vector<GElem> probe = detail::probe_elements(a);

  // (ii) alpha_g(D_{g^-1} D_h) = D_g D_{gh}
  for (GElem g : a.support) {
    const ExactMatrix& m = a.alpha.at(g);
    for (GElem h : probe) {
      Subspace lhs_dom = subspace_intersect(ideal_at(G.inv(g)), ideal_at(h));
      std::vector<Vec> images;
      for (const auto& v : lhs_dom.basis) images.push_back(m.apply(v));
      Subspace lhs = span_of(images, R.dim, R.field);
      Subspace rhs = subspace_intersect(ideal_at(g), ideal_at(G.op(g, h)));
      if (!(lhs == rhs)) {
        rep.add("axiom-ii", "g=" + G.label(g) + " h=" + G.label(h));
        if (rep.issues.size() > 32) return rep;
      }
    }
  }

  // twist entries: w_{g,e} = w_{e,g} = 1_g, membership and invertibility in
  // the corner ideal D_g D_{gh}
  for (GElem g : a.support) {
    if (!vec_eq(a.twist_of(g, e), a.one(g)))
      rep.add("axiom-iv", "w_{" + G.label(g) + ",e} != 1_" + G.label(g));
    if (!vec_eq(a.twist_of(e, g), a.one(g)))
      rep.add("axiom-iv", "w_{e," + G.label(g) + "} != 1_" + G.label(g));
  }
  for (GElem g : a.support)
    for (GElem h : probe) {
      GElem gh = G.op(g, h);
      if (!a.in_support(gh)) continue;
      Vec corner_unit = R.mul(a.one(g), a.one(gh));
      Vec w = a.twist_of(g, h);
      if (!vec_eq(R.mul(w, corner_unit), w) || !vec_eq(R.mul(corner_unit, w), w))
        rep.add("twist-membership", "w_{" + G.label(g) + "," + G.label(h) + "} outside D_" +
                                        G.label(g) + " D_" + G.label(gh));
      else if (!corner_inverse(R, w, corner_unit))
        rep.add("twist-invertible", "w_{" + G.label(g) + "," + G.label(h) +
                                        "} not invertible in its corner");
    }

  // (iii) alpha_g(alpha_h(x)) = w_{g,h} alpha_{gh}(x) w_{g,h}^{-1}
  //       for x in D_{h^-1} D_{(gh)^-1}
  for (GElem g : a.support)
    for (GElem h : a.support) {
      GElem gh = G.op(g, h);
      if (!a.in_support(gh)) continue;
      Subspace dom = subspace_intersect(ideal_at(G.inv(h)), ideal_at(G.inv(gh)));
      if (dom.dim() == 0) continue;
      Vec corner_unit = R.mul(a.one(g), a.one(gh));
      Vec w = a.twist_of(g, h);
      auto winv = corner_inverse(R, w, corner_unit);
      if (!winv) continue;  // already reported above
      for (const auto& x : dom.basis) {
        Vec lhs = a.apply(g, a.apply(h, x));
        Vec rhs = R.mul(R.mul(w, a.apply(gh, x)), *winv);
        if (!vec_eq(lhs, rhs)) {
          rep.add("axiom-iii", "g=" + G.label(g) + " h=" + G.label(h) + " at " + R.describe(x));
          break;
        }
      }
      if (rep.issues.size() > 32) return rep;
    }

  // (v) alpha_g(x w_{h,t}) w_{g,ht} = alpha_g(x) w_{g,h} w_{gh,t}
  //     for x in D_{g^-1} D_h D_{ht}
  for (GElem g : a.support)
    for (GElem h : a.support)
      for (GElem t : probe) {
        GElem ht = G.op(h, t);
        if (!a.in_support(ht)) continue;
        Subspace dom = subspace_intersect(subspace_intersect(ideal_at(G.inv(g)), ideal_at(h)),
                                          ideal_at(ht));
        if (dom.dim() == 0) continue;
        Vec w_ht = a.twist_of(h, t);
        Vec w_g_ht = a.twist_of(g, ht);
        Vec w_gh = a.twist_of(g, h);
        Vec w_ght = a.twist_of(G.op(g, h), t);
        for (const auto& x : dom.basis) {
          Vec lhs = R.mul(a.apply(g, R.mul(x, w_ht)), w_g_ht);
          Vec rhs = R.mul(R.mul(a.apply(g, x), w_gh), w_ght);
          if (!vec_eq(lhs, rhs)) {
            rep.add("axiom-v", "g=" + G.label(g) + " h=" + G.label(h) + " t=" + G.label(t));
            break;
          }
        }
        if (rep.issues.size() > 32) return rep;
      }

  return rep;
}

// ---------------------------------------------------------------------------
// Global actions

class GlobalAction {
 public:
  AlgebraPtr algebra;  // T
  GroupModel group;
  std::map<GElem, ExactMatrix> beta;  // finite: all g; Z: the generator at key 1
  std::map<std::pair<GElem, GElem>, Vec> twist;  // u_{g,h}, default 1_T

  const StructureAlgebra& T() const { return *algebra; }

  ExactMatrix beta_of(GElem g) const {
    if (group.is_finite()) {
      auto it = beta.find(g);
      if (it == beta.end()) fail("missing automorphism for " + group.label(g));
      return it->second;
    }
    const ExactMatrix& gen = beta.at(1);
    ExactMatrix m = ExactMatrix::identity(T().dim, T().field);
    if (g >= 0) {
      for (GElem k = 0; k < g; ++k) m = gen * m;
    } else {
      auto inv = inverse(gen);
      if (!inv) fail("generator automorphism is not invertible");
      for (GElem k = 0; k < -g; ++k) m = *inv * m;
    }
    return m;
  }

  Vec u_of(GElem g, GElem h) const {
    auto it = twist.find({g, h});
    return it == twist.end() ? T().unit : it->second;
  }

  bool has_nontrivial_twist() const {
    for (const auto& [gh, u] : twist)
      if (!vec_eq(u, T().unit)) return true;
    return false;
  }
};

inline ValidationReport validate_global(const GlobalAction& b) {
  ValidationReport rep;
  const StructureAlgebra& T = b.T();
  const GroupModel& G = b.group;

  auto check_automorphism = [&](const ExactMatrix& m, const std::string& who) {
    if (!inverse(m)) rep.add("automorphism", who + " is not invertible");
    for (size_t i = 0; i < T.dim; ++i)
      for (size_t j = 0; j < T.dim; ++j) {
        Vec lhs = m.apply(T.basis_product(i, j));
        Vec rhs = T.mul(m.apply(unit_vec(T.dim, i, T.field)), m.apply(unit_vec(T.dim, j, T.field)));
        if (!vec_eq(lhs, rhs)) {
          rep.add("automorphism", who + " not multiplicative at (" + T.basis_names[i] + "," +
                                      T.basis_names[j] + ")");
          return;
        }
      }
    if (!vec_eq(m.apply(T.unit), T.unit)) rep.add("automorphism", who + " does not fix 1");
  };

  if (!G.is_finite()) {
    if (!b.beta.count(1)) {
      rep.add("data", "integer group action must provide the generator automorphism");
      return rep;
    }
    check_automorphism(b.beta.at(1), "generator");
    if (b.has_nontrivial_twist()) rep.add("twist", "twisted global actions over Z not supported");
    return rep;
  }

  for (GElem g : G.elements()) {
    if (!b.beta.count(g)) {
      rep.add("data", "missing automorphism for " + G.label(g));
      return rep;
    }
    check_automorphism(b.beta.at(g), "beta_" + G.label(g));
  }
  if (b.beta.at(G.identity()) != ExactMatrix::identity(T.dim, T.field))
    rep.add("identity", "beta_e is not the identity");

  // composition up to conjugation by the twist, and the cocycle identity
  for (GElem g : G.elements())
    for (GElem h : G.elements()) {
      Vec u = b.u_of(g, h);
      auto uinv = corner_inverse(T, u, T.unit);
      if (!uinv) {
        rep.add("twist-invertible", "u_{" + G.label(g) + "," + G.label(h) + "}");
        continue;
      }
      ExactMatrix lhs = b.beta.at(g) * b.beta.at(h);
      const ExactMatrix& m_gh = b.beta.at(G.op(g, h));
      for (size_t j = 0; j < T.dim; ++j) {
        Vec x = unit_vec(T.dim, j, T.field);
        Vec want = T.mul(T.mul(u, m_gh.apply(x)), *uinv);
        if (!vec_eq(lhs.apply(x), want)) {
          rep.add("composition", "beta_" + G.label(g) + " beta_" + G.label(h) +
                                     " != u conj beta_" + G.label(G.op(g, h)));
          break;
        }
      }
      if (!vec_eq(b.u_of(g, G.identity()), T.unit) || !vec_eq(b.u_of(G.identity(), g), T.unit))
        rep.add("twist-normalized", "u_{g,e} or u_{e,g} != 1 at g=" + G.label(g));
      for (GElem t : G.elements()) {
        Vec lhs_c = T.mul(b.beta.at(g).apply(b.u_of(h, t)), b.u_of(g, G.op(h, t)));
        Vec rhs_c = T.mul(b.u_of(g, h), b.u_of(G.op(g, h), t));
        if (!vec_eq(lhs_c, rhs_c)) {
          rep.add("cocycle", "(g,h,t)=(" + G.label(g) + "," + G.label(h) + "," + G.label(t) + ")");
          break;
        }
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructions

struct Restriction {
  TwistedPartialAction action;  // on R = T 1_R
  CornerAlgebra corner;         // R inside T
};

/// Restrict a twisted global action to the ideal R = T 1_R of a central
/// idempotent: D_g = R intersect beta_g(R) with identity 1_R beta_g(1_R),
/// alpha_g the restriction of beta_g, w_{g,h} = u_{g,h} 1_R beta_g(1_R)
/// beta_{gh}(1_R).
///
/// For the integer group, supports are probed for |g| < z_window; a nonzero
/// ideal at the window edge means finiteness cannot be certified and is an
/// error.
inline Restriction restrict_global(const GlobalAction& b, const Vec& idem, size_t z_window = 0) {
  const StructureAlgebra& T = b.T();
  if (!T.is_idempotent(idem)) fail("restriction generator is not idempotent");
  if (!T.is_central(idem)) fail("restriction generator is not central");

  CornerAlgebra corner = corner_algebra(T, idem);
  auto R = std::make_shared<StructureAlgebra>(corner.algebra);

  std::vector<GElem> candidates;
  if (b.group.is_finite()) {
    candidates = b.group.elements();
  } else {
    if (z_window == 0) z_window = T.dim + 1;
    for (GElem g = -static_cast<GElem>(z_window); g <= static_cast<GElem>(z_window); ++g)
      candidates.push_back(g);
  }

  TwistedPartialAction a;
  a.algebra = R;
  a.group = b.group;
  for (GElem g : candidates) {
    ExactMatrix bg = b.beta_of(g);
    Vec one_g_T = T.mul(idem, bg.apply(idem));  // 1_R beta_g(1_R)
    if (is_zero_vec(one_g_T) && g != b.group.identity()) continue;
    if (!b.group.is_finite() &&
        (g == -static_cast<GElem>(z_window) || g == static_cast<GElem>(z_window)))
      fail("restriction over Z: nonzero ideal at probe window edge g=" + std::to_string(g) +
           "; support may be infinite");
    a.support.push_back(g);
    a.idem[g] = corner.from_parent(one_g_T);
    // alpha_g on R coordinates: embed, project onto D_{g^-1}, apply beta_g, read back
    Vec one_ginv_T = T.mul(idem, b.beta_of(b.group.inv(g)).apply(idem));
    ExactMatrix m(R->dim, R->dim, R->field);
    for (size_t j = 0; j < R->dim; ++j) {
      Vec x_T = corner.to_parent(unit_vec(R->dim, j, R->field));
      Vec y_T = bg.apply(T.mul(x_T, one_ginv_T));
      Vec y_R = corner.from_parent(y_T);
      for (size_t i = 0; i < R->dim; ++i) m.at(i, j) = y_R[i];
    }
    a.alpha.emplace(g, std::move(m));
  }
  // twists on supported pairs
  for (GElem g : a.support)
    for (GElem h : a.support) {
      GElem gh = b.group.op(g, h);
      if (!a.in_support(gh)) continue;
      Vec w_T = T.mul(T.mul(b.u_of(g, h), idem),
                      T.mul(b.beta_of(g).apply(idem), b.beta_of(gh).apply(idem)));
      Vec w_R = corner.from_parent(w_T);
      if (!vec_eq(w_R, R->mul(a.one(g), a.one(gh)))) a.twist[{g, h}] = w_R;
    }
  return {std::move(a), std::move(corner)};
}

/// Restrict the action to a subgroup H of a finite group; the result is an
/// action of H presented as a group in its own right.
inline TwistedPartialAction restrict_subgroup(const TwistedPartialAction& a,
                                              const std::vector<GElem>& H) {
  if (!a.group.is_finite()) fail("use restrict_subgroup_z for the integer group");
  if (!is_subgroup(a.group, H)) fail("H is not a subgroup");
  // subgroup as its own table group
  std::map<GElem, int> index;
  for (size_t i = 0; i < H.size(); ++i) index[H[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> tbl(H.size(), std::vector<int>(H.size()));
  std::vector<std::string> labels;
  for (size_t i = 0; i < H.size(); ++i) {
    labels.push_back(a.group.label(H[i]));
    for (size_t j = 0; j < H.size(); ++j) tbl[i][j] = index.at(a.group.op(H[i], H[j]));
  }
  TwistedPartialAction r;
  r.algebra = a.algebra;
  r.group = GroupModel::from_table(std::move(tbl), index.at(a.group.identity()), std::move(labels));
  for (size_t i = 0; i < H.size(); ++i) {
    GElem g = H[i];
    if (!a.in_support(g)) continue;
    r.support.push_back(static_cast<GElem>(i));
    r.idem[static_cast<GElem>(i)] = a.one(g);
    r.alpha.emplace(static_cast<GElem>(i), a.alpha.at(g));
  }
  for (size_t i = 0; i < H.size(); ++i)
    for (size_t j = 0; j < H.size(); ++j) {
      auto it = a.twist.find({H[i], H[j]});
      if (it != a.twist.end()) r.twist[{static_cast<GElem>(i), static_cast<GElem>(j)}] = it->second;
    }
  return r;
}

/// Restrict an integer-group action to the subgroup dZ (d > 0), reindexed so
/// the result is again an action of Z.
inline TwistedPartialAction restrict_subgroup_z(const TwistedPartialAction& a, GElem d) {
  if (a.group.is_finite()) fail("restrict_subgroup_z requires the integer group");
  if (d <= 0) fail("subgroup stride must be positive");
  TwistedPartialAction r;
  r.algebra = a.algebra;
  r.group = GroupModel::integers();
  for (GElem g : a.support) {
    if (g % d != 0) continue;
    GElem k = g / d;
    r.support.push_back(k);
    r.idem[k] = a.one(g);
    r.alpha.emplace(k, a.alpha.at(g));
  }
  for (const auto& [gh, w] : a.twist)
    if (gh.first % d == 0 && gh.second % d == 0) r.twist[{gh.first / d, gh.second / d}] = w;
  return r;
}

struct QuotientAction {
  TwistedPartialAction action;  // on R/I
  QuotientResult algebra_quotient;
};

/// Quotient by an alpha-invariant two-sided ideal I: the induced action on
/// R/I via the projection. Invariance (alpha_g(I cap D_{g^-1}) inside I) is
/// checked and violations are errors with witnesses.
inline QuotientAction quotient_action(const TwistedPartialAction& a,
                                      const std::vector<Vec>& ideal_gens) {
  const StructureAlgebra& R = a.R();
  Subspace I = span_of(ideal_gens, R.dim, R.field);
  for (GElem g : a.support) {
    Subspace dom = subspace_intersect(I, a.ideal_of(a.group.inv(g)));
    for (const auto& v : dom.basis) {
      Vec img = a.apply(g, v);
      if (!contains(I, img))
        fail("ideal is not invariant: alpha_" + a.group.label(g) + "(" + R.describe(v) +
             ") escapes I");
    }
  }
  QuotientResult q = quotient(R, ideal_gens);
  auto Q = std::make_shared<StructureAlgebra>(q.algebra);
  size_t qd = Q->dim;
  // section: parent coordinates of the chosen complement basis vectors
  ExactMatrix section(R.dim, qd, R.field);
  for (size_t j = 0; j < qd; ++j) section.at(q.section_indices[j], j) = Scalar::one(R.field);

  TwistedPartialAction out;
  out.algebra = Q;
  out.group = a.group;
  for (GElem g : a.support) {
    Vec one_q = q.projection.apply(a.one(g));
    if (is_zero_vec(one_q) && g != a.group.identity()) continue;
    out.support.push_back(g);
    out.idem[g] = one_q;
    out.alpha.emplace(g, q.projection * a.alpha.at(g) * section);
  }
  for (const auto& [gh, w] : a.twist)
    if (out.in_support(gh.first)) out.twist[gh] = q.projection.apply(w);
  return {std::move(out), std::move(q)};
}

/// Basis of the partial fixed ring {x : alpha_g(x 1_{g^-1}) = x 1_g for all g}.
inline std::vector<Vec> fixed_ring(const TwistedPartialAction& a) {
  const StructureAlgebra& R = a.R();
  if (R.dim == 0) return {};
  ExactMatrix stacked(0, R.dim, R.field);
  bool first = true;
  for (GElem g : a.support) {
    ExactMatrix diff = a.alpha.at(g) - R.right_mult(a.one(g));
    stacked = first ? diff : vstack(stacked, diff);
    first = false;
  }
  auto basis = span_of(kernel_basis(stacked), R.dim, R.field).basis;
  // the fixed ring is multiplicatively closed; verify rather than assume
  Subspace sp = span_of(basis, R.dim, R.field);
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!contains(sp, R.mul(x, y)))
        fail("fixed ring is not multiplicatively closed (action invalid?)");
  return basis;
}

/// A twisted global action of a finite group viewed as a twisted partial
/// action with D_g = T for every g.
inline TwistedPartialAction global_as_partial(const GlobalAction& b) {
  if (!b.group.is_finite()) fail("global_as_partial requires a finite group");
  TwistedPartialAction a;
  a.algebra = b.algebra;
  a.group = b.group;
  for (GElem g : b.group.elements()) {
    a.support.push_back(g);
    a.idem[g] = b.T().unit;
    a.alpha.emplace(g, b.beta_of(g));
  }
  for (const auto& [gh, u] : b.twist)
    if (!vec_eq(u, b.T().unit)) a.twist[gh] = u;
  return a;
}

struct FiniteTypeResult {
  bool finite_type = false;
  std::vector<GElem> witness_set;  // the g_1..g_n realizing finite type
  std::optional<GElem> refuting_translate;
  std::string note;
};

/// Finite-type test: a finite S with sum_i D_{g g_i} = R for every g. Finite
/// groups always qualify (take S = G). Over Z a finitely supported action
/// with R != 0 never does: translating any finite S far enough empties the
/// sum; a concrete refuting translate for S = support is reported.
inline FiniteTypeResult is_finite_type(const TwistedPartialAction& a) {
  FiniteTypeResult out;
  if (a.group.is_finite()) {
    out.finite_type = true;
    out.witness_set = a.group.elements();
    out.note = "finite group: D_e = R makes the translated sum all of R";
    return out;
  }
  if (a.R().dim == 0) {
    out.finite_type = true;
    out.note = "zero algebra: every sum equals R = 0";
    return out;
  }
  GElem lo = a.support.front(), hi = a.support.front();
  for (GElem g : a.support) {
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  out.finite_type = false;
  out.refuting_translate = hi - lo + 1;
  out.note = "for any finite S with min(S) = m, the translate g = " + std::to_string(hi) +
             " - m + 1 gives (g+S) disjoint from the support, so sum_i D_{g+g_i} = 0 != R; "
             "for S = support(alpha) that is g = " + std::to_string(hi - lo + 1);
  return out;
}

}  // namespace pcp
