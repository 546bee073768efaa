// Scripted verification campaigns over fixed fixtures and seeded random
// instances. Random instances are produced exclusively by restricting random
// global actions to random central idempotents: raw axiom data almost never
// satisfies the composition axioms, while restriction is valid by
// construction.
//
// "Artinian" is operationalized as "finite-dimensional over the base field";
// every finding that leans on it says so.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcp/crossed.hpp"
#include "pcp/fixtures.hpp"
#include "pcp/forms.hpp"
#include "pcp/globalization.hpp"
#include "pcp/rng.hpp"
#include "pcp/triangular.hpp"

namespace pcp {

struct LabConfig {
  std::string suite;
  uint64_t seed = 20240101;
  size_t trials = 25;
  size_t max_dim = 4;    // bound on dim R (and on dim T when sampling)
  size_t max_group = 4;  // bound on |G|
  FieldSpec field = FieldSpec::rationals();

  void check() const {
    if (trials == 0 || max_dim == 0 || max_group == 0) fail("lab bounds must be positive");
    if (max_dim > 6 || max_group > 8) fail("lab bounds exceed desk scale (dim <= 6, |G| <= 8)");
  }
};

struct Finding {
  std::string suite;
  std::string fingerprint;
  std::string claim;
  std::string verdict;  // "confirmed" | "refuted" | "degenerate"
  std::string witness;

  static Finding confirmed(std::string suite, std::string fp, std::string claim,
                           std::string witness = "") {
    return {std::move(suite), std::move(fp), std::move(claim), "confirmed", std::move(witness)};
  }
  static Finding refuted(std::string suite, std::string fp, std::string claim,
                         std::string witness) {
    return {std::move(suite), std::move(fp), std::move(claim), "refuted", std::move(witness)};
  }
  static Finding degenerate(std::string suite, std::string fp, std::string claim,
                            std::string witness = "") {
    return {std::move(suite), std::move(fp), std::move(claim), "degenerate", std::move(witness)};
  }
};

inline size_t count_refuted(const std::vector<Finding>& fs) {
  size_t n = 0;
  for (const auto& f : fs)
    if (f.verdict == "refuted") ++n;
  return n;
}

// ---------------------------------------------------------------------------
// Random instances

namespace labdetail {

struct SampledGlobal {
  GlobalAction global;
  Vec idem;
  std::string fingerprint;
  bool twisted = false;
};

struct SampleOptions {
  bool allow_twist = true;
  bool allow_nonsemisimple = true;
  bool full_idempotent = false;  // take 1_R = 1_T (global case)
};

inline GroupModel pick_group(Rng& rng, size_t max_group, std::string& name) {
  std::vector<std::pair<std::string, std::function<GroupModel()>>> catalog;
  for (size_t n = 1; n <= max_group; ++n)
    catalog.push_back({"C" + std::to_string(n), [n] { return make_cyclic(n); }});
  if (max_group >= 4)
    catalog.push_back({"C2xC2", [] { return direct_product(make_cyclic(2), make_cyclic(2)); }});
  if (max_group >= 6) catalog.push_back({"S3", [] { return make_symmetric(3); }});
  if (max_group >= 8)
    catalog.push_back({"C4xC2", [] { return direct_product(make_cyclic(4), make_cyclic(2)); }});
  size_t i = static_cast<size_t>(rng.below(catalog.size()));
  name = catalog[i].first;
  return catalog[i].second();
}

/// One orbit part of T: the coset space G/H carrying copies of a block
/// algebra, permuted by left translation.
struct OrbitPart {
  std::vector<std::vector<GElem>> cosets;      // each sorted
  StructureAlgebra block;
  std::string label;
};

inline std::vector<std::vector<GElem>> left_cosets(const GroupModel& g,
                                                   const std::vector<GElem>& h) {
  std::vector<std::vector<GElem>> out;
  std::set<GElem> seen;
  for (GElem x : g.elements()) {
    if (seen.count(x)) continue;
    std::vector<GElem> coset;
    for (GElem y : h) coset.push_back(g.op(x, y));
    std::sort(coset.begin(), coset.end());
    for (GElem z : coset) seen.insert(z);
    out.push_back(std::move(coset));
  }
  return out;
}

inline size_t coset_index(const std::vector<std::vector<GElem>>& cosets, GElem x) {
  for (size_t i = 0; i < cosets.size(); ++i)
    for (GElem y : cosets[i])
      if (y == x) return i;
  fail("element not found in coset decomposition");
}

/// Sample a twisted global action on a product of permuted blocks, plus a
/// random central idempotent to restrict by.
inline SampledGlobal sample_global(Rng& rng, const LabConfig& cfg, const SampleOptions& opt) {
  std::string gname;
  GroupModel G = pick_group(rng, cfg.max_group, gname);
  auto subgroups = all_subgroups(G);

  std::vector<OrbitPart> parts;
  size_t budget = cfg.max_dim;
  std::string parts_fp;
  for (int attempt = 0; attempt < 8 && budget > 0; ++attempt) {
    const auto& H = subgroups[static_cast<size_t>(rng.below(subgroups.size()))];
    auto cosets = left_cosets(G, H);
    size_t copies = cosets.size();
    std::vector<std::pair<std::string, StructureAlgebra>> blocks;
    blocks.push_back({"K", field_algebra(cfg.field)});
    if (opt.allow_nonsemisimple) blocks.push_back({"K[x]/(x^2)", dual_numbers(cfg.field)});
    if (budget >= 4 * copies) blocks.push_back({"M2", matrix_algebra(cfg.field, 2)});
    const auto& [bname, block] = blocks[static_cast<size_t>(rng.below(blocks.size()))];
    if (copies * block.dim > budget) continue;
    budget -= copies * block.dim;
    if (!parts_fp.empty()) parts_fp += "+";
    parts_fp += "[G:H]=" + std::to_string(copies) + "x" + bname;
    parts.push_back({std::move(cosets), block, bname});
    if (rng.coin()) break;
  }
  if (parts.empty()) {
    parts.push_back({left_cosets(G, G.elements()), field_algebra(cfg.field), "K"});
    parts_fp = "[G:H]=1xK";
  }

  // assemble T and the permutation automorphisms
  StructureAlgebra T;
  bool first = true;
  for (const auto& p : parts)
    for (size_t c = 0; c < p.cosets.size(); ++c) {
      T = first ? p.block : direct_sum(T, p.block);
      first = false;
    }
  auto Tp = std::make_shared<StructureAlgebra>(T);

  GlobalAction b;
  b.algebra = Tp;
  b.group = G;
  for (GElem g : G.elements()) {
    ExactMatrix m(T.dim, T.dim, cfg.field);
    size_t off = 0;
    for (const auto& p : parts) {
      size_t bd = p.block.dim;
      for (size_t c = 0; c < p.cosets.size(); ++c) {
        // copy c moves to the coset of g * (coset rep)
        size_t dst = coset_index(p.cosets, G.op(g, p.cosets[c].front()));
        for (size_t k = 0; k < bd; ++k)
          m.at(off + dst * bd + k, off + c * bd + k) = Scalar::one(cfg.field);
      }
      off += bd * p.cosets.size();
    }
    b.beta.emplace(g, std::move(m));
  }

  // optional C_n cocycle by the central unit -1
  bool twisted = false;
  bool is_cyclic = gname.size() >= 1 && gname[0] == 'C' && gname.find('x') == std::string::npos;
  if (opt.allow_twist && is_cyclic && G.order() >= 2 && rng.coin() &&
      !(cfg.field.characteristic() == 2)) {
    size_t n = G.order();
    Vec minus_one = vec_scale(-Scalar::one(cfg.field), T.unit);
    for (GElem i = 0; i < static_cast<GElem>(n); ++i)
      for (GElem j = 0; j < static_cast<GElem>(n); ++j)
        if (i + j >= static_cast<GElem>(n)) b.twist[{i, j}] = minus_one;
    twisted = true;
  }

  // central idempotent: a subset of the per-copy block units
  Vec idem = zero_vec(T.dim, cfg.field);
  std::string idem_fp;
  {
    size_t off = 0;
    bool any = false;
    std::vector<size_t> copy_offsets;
    std::vector<const StructureAlgebra*> copy_blocks;
    for (const auto& p : parts)
      for (size_t c = 0; c < p.cosets.size(); ++c) {
        copy_offsets.push_back(off);
        copy_blocks.push_back(&p.block);
        off += p.block.dim;
      }
    for (size_t c = 0; c < copy_offsets.size(); ++c) {
      bool take = opt.full_idempotent || rng.coin();
      idem_fp += take ? "1" : "0";
      if (take) {
        any = true;
        for (size_t k = 0; k < copy_blocks[c]->dim; ++k)
          if (!copy_blocks[c]->unit[k].is_zero())
            idem[copy_offsets[c] + k] = copy_blocks[c]->unit[k];
      }
    }
    if (!any) {
      size_t c = static_cast<size_t>(rng.below(copy_offsets.size()));
      idem_fp[c] = '1';
      for (size_t k = 0; k < copy_blocks[c]->dim; ++k)
        if (!copy_blocks[c]->unit[k].is_zero())
          idem[copy_offsets[c] + k] = copy_blocks[c]->unit[k];
    }
  }

  SampledGlobal out;
  out.global = std::move(b);
  out.idem = std::move(idem);
  out.twisted = twisted;
  out.fingerprint = "field=" + cfg.field.str() + ";G=" + gname + ";T=" + parts_fp +
                    ";twist=" + (twisted ? "-1" : "1") + ";idem=" + idem_fp;
  return out;
}

inline uint64_t trial_seed(uint64_t seed, size_t trial) {
  Rng r(seed + 0x9e3779b97f4a7c15ull * (trial + 1));
  return r.next();
}

/// Radical dimension by an honest method, or nullopt when none applies:
/// trace form over Q or GF(p > dim), exhaustive search over tiny GF(p).
inline std::optional<size_t> radical_dim_checked(const StructureAlgebra& a) {
  if (radical_field_supported(a)) return jacobson_radical(a).size();
  double count = 1;
  for (size_t i = 0; i < a.dim; ++i) {
    count *= static_cast<double>(a.field.p);
    if (count > 65536) return std::nullopt;
  }
  return radical_brute_force(a).size();
}

}  // namespace labdetail

/// Spec surface: a valid random instance from a seed and bounds.
inline TwistedPartialAction random_action(uint64_t seed, size_t max_dim, size_t max_group,
                                          const FieldSpec& field = FieldSpec::rationals(),
                                          bool allow_twist = true) {
  LabConfig cfg;
  cfg.seed = seed;
  cfg.max_dim = max_dim;
  cfg.max_group = max_group;
  cfg.field = field;
  cfg.trials = 1;
  cfg.check();
  Rng rng(seed);
  labdetail::SampleOptions opt;
  opt.allow_twist = allow_twist;
  auto s = labdetail::sample_global(rng, cfg, opt);
  return restrict_global(s.global, s.idem).action;
}

// ---------------------------------------------------------------------------
// Suites

namespace labdetail {

inline std::string fp(const LabConfig& cfg, size_t trial, const std::string& inner) {
  return "suite=" + cfg.suite + ";seed=" + std::to_string(cfg.seed) + ";trial=" +
         std::to_string(trial) + ";" + inner;
}

inline std::vector<Finding> suite_artinian(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string surrogate =
      "artinian is operationalized as finite-dimensional over the base field";
  // fixture: the 4-dimensional Z-crossed product without finite type
  {
    TwistedPartialAction a = fixtures::two_idempotents_z(cfg.field);
    auto rep = validate_action(a);
    CrossedProduct cp = build_crossed(a);
    auto va = validate_algebra(cp.algebra);
    auto ft = is_finite_type(a);
    bool ok = rep.ok() && va.ok() && cp.dim() == 4 && !ft.finite_type;
    std::string claim =
        "without finite type, a crossed product can be finite-dimensional (artinian) while G is "
        "infinite; " + surrogate;
    std::string wit = "dim=" + std::to_string(cp.dim()) + "; refuting translate g=" +
                      std::to_string(ft.refuting_translate ? *ft.refuting_translate : 0);
    out.push_back(ok ? Finding::confirmed(cfg.suite, "fixture=two-idempotents-Z", claim, wit)
                     : Finding::refuted(cfg.suite, "fixture=two-idempotents-Z", claim,
                                        rep.str() + va.str()));
  }
  {
    TwistedPartialAction a = fixtures::lone_fiber_z(cfg.field);
    CrossedProduct cp = build_crossed(a);
    auto ft = is_finite_type(a);
    bool ok = cp.dim() == 1 && cp.dim() == a.dim() && !ft.finite_type;
    std::string claim = "the lone-fiber Z-action has R*G = R (dimension 1) without finite type";
    out.push_back(ok ? Finding::confirmed(cfg.suite, "fixture=lone-fiber-Z", claim,
                                          "dim=" + std::to_string(cp.dim()))
                     : Finding::refuted(cfg.suite, "fixture=lone-fiber-Z", claim,
                                        "dim=" + std::to_string(cp.dim())));
  }
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    Restriction r = restrict_global(s.global, s.idem);
    CrossedProduct cp = build_crossed(r.action);
    size_t expect = 0;
    for (GElem g : r.action.support) expect += r.action.ideal_of(g).dim();
    auto ft = is_finite_type(r.action);
    bool ok = validate_algebra(cp.algebra).ok() && cp.dim() == expect && ft.finite_type;
    std::string claim =
        "finite G and finite-dimensional R give a finite-dimensional (artinian) crossed product "
        "of dimension sum dim D_g, and finite type holds; " + surrogate;
    out.push_back(ok ? Finding::confirmed(cfg.suite, fp(cfg, t, s.fingerprint), claim,
                                          "dim=" + std::to_string(cp.dim()))
                     : Finding::refuted(cfg.suite, fp(cfg, t, s.fingerprint), claim,
                                        "dim=" + std::to_string(cp.dim()) + " expected " +
                                            std::to_string(expect)));
  }
  out.push_back(Finding::degenerate(
      cfg.suite, "note=out-of-scope",
      "Z-actions with cofinitely many equal nonzero D_g (another source of artinian crossed "
      "products over an infinite group) are outside this engine: stored supports are finite; "
      "the perfect/semilocal/semiprimary properties degenerate to the same finite-dimension "
      "surrogate at this scale",
      "documentation note, no instance"));
  return out;
}

inline std::vector<Finding> suite_noetherian(const LabConfig& cfg) {
  std::vector<Finding> out;
  auto run_one = [&](const TwistedPartialAction& a, const std::string& key) {
    CrossedProduct cp = build_crossed(a);
    size_t bound = a.support.size() * a.dim();
    bool ok = cp.dim() <= bound && validate_algebra(cp.algebra).ok();
    std::string claim =
        "finitely many nonzero D_g keep R*G finite-dimensional (dimension <= |support| dim R), "
        "so noetherianity transfers at desk scale";
    out.push_back(ok ? Finding::confirmed(cfg.suite, key, claim,
                                          "dim=" + std::to_string(cp.dim()) + " bound=" +
                                              std::to_string(bound))
                     : Finding::refuted(cfg.suite, key, claim, "dim=" + std::to_string(cp.dim())));
  };
  run_one(fixtures::two_idempotents_z(cfg.field), "fixture=two-idempotents-Z");
  run_one(fixtures::lone_fiber_z(cfg.field), "fixture=lone-fiber-Z");
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    run_one(restrict_global(s.global, s.idem).action, fp(cfg, t, s.fingerprint));
  }
  return out;
}

inline std::vector<Finding> suite_semisimple(const LabConfig& cfg) {
  std::vector<Finding> out;
  bool disjoint = true;  // no confirmation may come from a |G|-divisible trial
  const std::string claim =
      "with |G| invertible, R is semisimple iff R*G is semisimple";
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    size_t order = s.global.group.order();
    unsigned long ch = cfg.field.characteristic();
    if (ch != 0 && order % ch == 0) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim, "|G| not invertible; skipped"));
      continue;
    }
    Restriction r = restrict_global(s.global, s.idem);
    CrossedProduct cp = build_crossed(r.action);
    auto rad_r = radical_dim_checked(r.action.R());
    auto rad_cp = radical_dim_checked(cp.algebra);
    if (!rad_r || !rad_cp) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim,
                                        "no honest radical method in this characteristic"));
      continue;
    }
    bool ss_r = *rad_r == 0, ss_cp = *rad_cp == 0;
    if (ss_r == ss_cp) {
      if (ch != 0 && order % ch == 0) disjoint = false;
      out.push_back(Finding::confirmed(cfg.suite, key, claim,
                                       "rad(R)=" + std::to_string(*rad_r) + " rad(R*G)=" +
                                           std::to_string(*rad_cp)));
    } else
      out.push_back(Finding::refuted(cfg.suite, key, claim,
                                     "rad(R)=" + std::to_string(*rad_r) + " rad(R*G)=" +
                                         std::to_string(*rad_cp)));
  }
  // control: GF(2)[C2], where |G| is not invertible
  {
    FieldSpec gf2 = FieldSpec::prime_field(2);
    auto R = std::make_shared<StructureAlgebra>(field_algebra(gf2));
    TwistedPartialAction a = fixtures::trivial_action(R, make_cyclic(2));
    CrossedProduct cp = build_crossed(a);
    size_t rad = radical_brute_force(cp.algebra).size();
    std::string claim2 =
        "control with |G| = 0 in K: the group algebra GF(2)[C2] has radical of dimension 1, so "
        "the invertibility hypothesis is not superfluous";
    out.push_back(rad == 1 ? Finding::confirmed(cfg.suite, "control=GF(2)[C2]", claim2,
                                                "radical dim = 1 (exhaustive check)")
                           : Finding::refuted(cfg.suite, "control=GF(2)[C2]", claim2,
                                              "radical dim = " + std::to_string(rad)));
  }
  // the confirmations and the control are disjoint by characteristic
  {
    std::string claim3 =
        "confirmation trials and the |G|-divisible control are disjoint by field characteristic";
    out.push_back(disjoint
                      ? Finding::confirmed(cfg.suite, "assert=disjointness", claim3)
                      : Finding::refuted(cfg.suite, "assert=disjointness", claim3,
                                         "a confirmed trial had |G| divisible by char K"));
  }
  return out;
}

/// R-linear projection onto N = (R*G) eps, randomized within the affine
/// solution space; nullopt when the linear system is infeasible.
inline std::optional<ExactMatrix> random_r_linear_projection(const CrossedProduct& cp,
                                                             const ModuleRep& rep,
                                                             const Subspace& N, Rng& rng) {
  const FieldSpec& f = cp.algebra.field;
  size_t m = rep.m;
  // unknown X (m x m), constraints: X v = v on N, reduce_mod(N, X col) = 0,
  // X rho(r d_e) = rho(r d_e) X for every R-basis r
  std::vector<ExactMatrix> commute_with;
  const TwistedPartialAction& a = cp.action;
  GElem e = a.group.identity();
  for (size_t i = 0; i < a.dim(); ++i) {
    Vec r = unit_vec(a.dim(), i, f);
    commute_with.push_back(rep.act(cp.coords_of(CrossedElement::term(a, e, r))));
  }
  size_t rows = N.dim() * m + m * m + commute_with.size() * m * m;
  ExactMatrix sys(rows, m * m, f);
  Vec rhs = zero_vec(rows, f);
  size_t row = 0;
  // X v = v
  for (const auto& v : N.basis) {
    for (size_t i = 0; i < m; ++i) {
      for (size_t k = 0; k < m; ++k) sys.at(row, i * m + k) = v[k];
      rhs[row] = v[i];
      ++row;
    }
  }
  // columns of X reduce to zero mod N; the reduction is linear, so the row
  // for entry (i, c) is sum_k Red[i][k] X[k][c] = 0
  ExactMatrix red(m, m, f);
  for (size_t k = 0; k < m; ++k) {
    Vec r = reduce_mod(N, unit_vec(m, k, f));
    for (size_t i = 0; i < m; ++i) red.at(i, k) = r[i];
  }
  for (size_t c = 0; c < m; ++c)
    for (size_t i = 0; i < m; ++i) {
      for (size_t k = 0; k < m; ++k)
        if (!red.at(i, k).is_zero()) sys.at(row, k * m + c) = red.at(i, k);
      ++row;
    }
  // equivariance under R
  for (const auto& rho_r : commute_with) {
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) {
        // (X rho - rho X)[i][j] = sum_k X[i][k] rho[k][j] - rho[i][k] X[k][j]
        for (size_t k = 0; k < m; ++k) {
          if (!rho_r.at(k, j).is_zero()) sys.at(row, i * m + k) += rho_r.at(k, j);
          if (!rho_r.at(i, k).is_zero()) sys.at(row, k * m + j) -= rho_r.at(i, k);
        }
        ++row;
      }
  }
  auto base = solve(sys, rhs);
  if (!base) return std::nullopt;
  Vec x = *base;
  auto hom = kernel_basis(sys);
  for (const auto& z : hom) {
    long c = rng.range(-2, 2);
    if (c != 0) vec_axpy(x, Scalar::from_long(c, f), z);
  }
  ExactMatrix X(m, m, f);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) X.at(i, j) = x[i * m + j];
  return X;
}

inline std::vector<Finding> suite_maschke(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "the averaging operator fixes N, is idempotent onto N, and commutes with the crossed "
      "product action";
  const std::string sharp_claim =
      "the quoted averaging operator is an R*G-map and restricts on N to multiplication by "
      "(sum_g 1_{g^-1})/|G|; it is the identity on N exactly when sum_g 1_g = |G| 1_R";
  bool deficiency_seen = false;
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    // alternate between global restrictions (where the quoted formula's
    // postconditions are expected) and genuinely partial ones (where the
    // identity-on-N postcondition provably needs sum 1_g = |G| 1_R)
    opt.full_idempotent = (t % 2 == 0);
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    size_t order = s.global.group.order();
    unsigned long ch = cfg.field.characteristic();
    if (ch != 0 && order % ch == 0) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim, "|G| not invertible; skipped"));
      continue;
    }
    Restriction r = restrict_global(s.global, s.idem);
    CrossedProduct cp = build_crossed(r.action);
    ModuleRep rep = regular_representation(cp);
    // N = (R*G) eps for eps = 1_g d_e at a random supported g
    GElem g = r.action.support[static_cast<size_t>(rng.below(r.action.support.size()))];
    Vec eps = cp.coords_of(CrossedElement::term(r.action, r.action.group.identity(),
                                                r.action.one(g)));
    std::vector<Vec> ngens;
    ExactMatrix right_eps = cp.algebra.right_mult(eps);
    for (size_t j = 0; j < cp.dim(); ++j) ngens.push_back(right_eps.col(j));
    Subspace N = span_of(ngens, cp.dim(), cfg.field);
    auto pi = random_r_linear_projection(cp, rep, N, rng);
    if (!pi) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim,
                                        "no R-linear projection onto N exists"));
      continue;
    }
    MaschkeResult res = maschke_average(r.action, rep, *pi);
    // the exact restriction of Psi to N: multiplication by (sum_g 1_{g^-1})/|G|
    Vec zvec = zero_vec(r.action.dim(), cfg.field);
    for (GElem h : r.action.support) zvec = vec_add(zvec, r.action.one(r.action.group.inv(h)));
    bool full_sum = vec_eq(zvec, vec_scale(Scalar::from_long(static_cast<long>(order), cfg.field),
                                           r.action.R().unit));
    ExactMatrix z_act =
        rep.act(cp.coords_of(CrossedElement::term(r.action, r.action.group.identity(), zvec)))
            .scaled(Scalar::from_long(static_cast<long>(order), cfg.field).inverse());
    bool sharp_ok = true;
    for (const auto& v : N.basis)
      if (!vec_eq(res.psi.apply(v), z_act.apply(v))) sharp_ok = false;
    bool equivariant = true;
    for (const auto& issue : res.checks.issues)
      if (issue.check == "psi-equivariant") equivariant = false;
    bool trivial_g = order == 1;
    bool psi_eq_pi = trivial_g ? (res.psi == *pi) : true;

    if (full_sum) {
      if (res.checks.ok() && psi_eq_pi && sharp_ok)
        out.push_back(Finding::confirmed(cfg.suite, key, claim,
                                         "N=(R*G)(1_" + r.action.group.label(g) + " d_e), dim " +
                                             std::to_string(N.dim())));
      else
        out.push_back(Finding::refuted(cfg.suite, key, claim, res.checks.str()));
    } else {
      // proper partial instance: the quoted formula cannot fix N; verify the
      // sharp statement instead and surface the deficiency
      deficiency_seen = true;
      if (equivariant && sharp_ok)
        out.push_back(Finding::confirmed(cfg.suite, key, sharp_claim,
                                         "sum_g 1_g != |G| 1_R here, and Psi|_N matched the "
                                         "predicted multiplication exactly"));
      else
        out.push_back(Finding::refuted(cfg.suite, key, sharp_claim, res.checks.str()));
    }
  }
  if (deficiency_seen)
    out.push_back(Finding::confirmed(
        cfg.suite, "observation=partial-support",
        "on instances with some D_g a proper ideal, the quoted averaging operator restricts to "
        "multiplication by (sum_g 1_{g^-1})/|G| on N rather than the identity; the identity-on-N "
        "postcondition needs sum_g 1_g = |G| 1_R (all global instances satisfy it)",
        "surfaced by exact arithmetic; see per-trial findings"));
  return out;
}

inline std::vector<Finding> suite_forms(const LabConfig& cfg, bool symmetric) {
  std::vector<Finding> out;
  const std::string what = symmetric ? "symmetric" : "Frobenius";
  const std::string claim = "if R is " + what + ", then R*G is " + what;
  auto search = [&](const StructureAlgebra& a, uint64_t seed) {
    return symmetric ? symmetric_form(a, seed) : frobenius_form(a, seed);
  };
  auto run_one = [&](const TwistedPartialAction& a, const std::string& key, uint64_t seed) {
    FormSearch base = search(a.R(), seed);
    if (!base.form) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim,
                                        "R has no " + what + " form (" + base.method + ")"));
      return;
    }
    CrossedProduct cp = build_crossed(a);
    FormSearch lifted = search(cp.algebra, seed);
    if (lifted.form) {
      // re-check the witness exactly
      ExactMatrix gram(cp.dim(), cp.dim(), cfg.field);
      for (size_t i = 0; i < cp.dim(); ++i)
        for (size_t j = 0; j < cp.dim(); ++j)
          gram.at(i, j) = lifted.form->apply(cp.algebra.basis_product(i, j));
      bool nonsing = !det(gram).is_zero();
      out.push_back(nonsing
                        ? Finding::confirmed(cfg.suite, key, claim,
                                             "witness found by " + lifted.method)
                        : Finding::refuted(cfg.suite, key, claim, "witness Gram is singular"));
    } else if (lifted.exact) {
      out.push_back(Finding::refuted(cfg.suite, key, claim,
                                     "R*G has provably no " + what + " form (" + lifted.method +
                                         ")"));
    } else {
      out.push_back(Finding::degenerate(cfg.suite, key, claim, lifted.note));
    }
  };
  // fixtures: dual numbers and M2 with the trivial C2 action
  {
    auto dn = std::make_shared<StructureAlgebra>(dual_numbers(cfg.field));
    run_one(fixtures::trivial_action(dn, make_cyclic(2)), "fixture=dual-numbers-C2", cfg.seed);
    auto m2 = std::make_shared<StructureAlgebra>(matrix_algebra(cfg.field, 2));
    run_one(fixtures::trivial_action(m2, make_cyclic(2)), "fixture=M2-C2", cfg.seed);
  }
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    run_one(restrict_global(s.global, s.idem).action, fp(cfg, t, s.fingerprint),
            trial_seed(cfg.seed, t));
  }
  return out;
}

inline std::vector<Finding> suite_subgroup(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "R*G = R*H + A with R*H a subalgebra and A a two-sided R*H-stable complement, for every "
      "subgroup H";
  // fixture: the Z-action restricted to 2Z has support {0}
  {
    TwistedPartialAction a = fixtures::two_idempotents_z(cfg.field);
    TwistedPartialAction sub = restrict_subgroup_z(a, 2);
    bool ok = validate_action(sub).ok() && sub.support == std::vector<GElem>{0};
    out.push_back(ok ? Finding::confirmed(cfg.suite, "fixture=two-idempotents-Z;H=2Z",
                                          "restriction to 2Z is supported only at 0",
                                          "support={0}")
                     : Finding::refuted(cfg.suite, "fixture=two-idempotents-Z;H=2Z",
                                        "restriction to 2Z is supported only at 0", "support"));
  }
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    Restriction r = restrict_global(s.global, s.idem);
    CrossedProduct cp = build_crossed(r.action);
    bool all_ok = true;
    std::string wit;
    size_t n_sub = 0;
    for (const auto& H : all_subgroups(r.action.group)) {
      ++n_sub;
      std::set<GElem> hs(H.begin(), H.end());
      TwistedPartialAction sub = restrict_subgroup(r.action, H);
      if (!validate_action(sub).ok()) {
        all_ok = false;
        wit = "restricted action invalid for |H|=" + std::to_string(H.size());
        break;
      }
      CrossedProduct cph = build_crossed(sub);
      size_t expect = 0;
      for (GElem h : H)
        if (r.action.in_support(h)) expect += r.action.ideal_of(h).dim();
      if (cph.dim() != expect) {
        all_ok = false;
        wit = "dim R*H mismatch";
        break;
      }
      // split the crossed-product basis and check stability on basis pairs
      for (size_t i = 0; i < cp.dim() && all_ok; ++i) {
        const auto& [gi, ji] = cp.basis_tags[i];
        CrossedElement xi = CrossedElement::term(r.action, gi, cp.ideal_bases.at(gi).basis[ji]);
        for (size_t j = 0; j < cp.dim(); ++j) {
          const auto& [gj, jj] = cp.basis_tags[j];
          CrossedElement xj = CrossedElement::term(r.action, gj, cp.ideal_bases.at(gj).basis[jj]);
          CrossedElement prod = cross_multiply(r.action, xi, xj);
          bool i_in = hs.count(gi) > 0, j_in = hs.count(gj) > 0;
          for (const auto& [g2, v] : prod.parts) {
            bool p_in = hs.count(g2) > 0;
            if (i_in && j_in && !p_in) {
              all_ok = false;
              wit = "R*H not closed under multiplication";
              break;
            }
            if ((i_in != j_in) && p_in) {
              all_ok = false;
              wit = "A not stable under R*H multiplication";
              break;
            }
          }
          if (!all_ok) break;
        }
      }
      if (!all_ok) break;
    }
    out.push_back(all_ok ? Finding::confirmed(cfg.suite, key, claim,
                                              std::to_string(n_sub) + " subgroups checked")
                         : Finding::refuted(cfg.suite, key, claim, wit));
  }
  return out;
}

}  // namespace labdetail

/// The quotient comparison used by the quotient suite and the acceptance
/// tests: (R*G)/(I*G) and (R/I)*G must have equal dimension and matching
/// structure constants under the canonical basis map. Returns an error
/// string, empty on success. Throws only if the ideal is not invariant.
inline std::string quotient_iso_check(const TwistedPartialAction& a,
                                      const std::vector<Vec>& ideal_gens) {
  const StructureAlgebra& R = a.R();
  QuotientAction qa = quotient_action(a, ideal_gens);
  if (!validate_action(qa.action).ok()) return "quotient action invalid";
  CrossedProduct cp = build_crossed(a);
  CrossedProduct cq = build_crossed(qa.action);
  std::vector<Vec> igens;
  for (GElem g : a.support) {
    Subspace cut = subspace_intersect(span_of(ideal_gens, R.dim, R.field), a.ideal_of(g));
    for (const auto& b : cut.basis)
      igens.push_back(cp.coords_of(CrossedElement::term(a, g, b)));
  }
  QuotientResult qcp = quotient(cp.algebra, igens);
  if (qcp.algebra.dim != cq.dim())
    return "dimension mismatch: " + std::to_string(qcp.algebra.dim) + " vs " +
           std::to_string(cq.dim());
  ExactMatrix phi(cq.dim(), qcp.algebra.dim, R.field);
  for (size_t c = 0; c < qcp.algebra.dim; ++c) {
    size_t parent_idx = qcp.section_indices[c];
    const auto& [g, j] = cp.basis_tags[parent_idx];
    Vec pushed = qa.algebra_quotient.projection.apply(cp.ideal_bases.at(g).basis[j]);
    Vec img = cq.coords_of(CrossedElement::term(qa.action, g, pushed));
    for (size_t i = 0; i < cq.dim(); ++i) phi.at(i, c) = img[i];
  }
  if (rank(phi) != cq.dim()) return "canonical map not bijective";
  for (size_t i = 0; i < qcp.algebra.dim; ++i)
    for (size_t j = 0; j < qcp.algebra.dim; ++j) {
      Vec lhs = phi.apply(qcp.algebra.basis_product(i, j));
      Vec rhs = cq.algebra.mul(phi.col(i), phi.col(j));
      if (!vec_eq(lhs, rhs)) return "structure constants do not match";
    }
  return "";
}

namespace labdetail {

inline std::vector<Finding> suite_quotient(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "(R*G)/(I*G) and (R/I)*G agree: equal dimension and matching structure constants under "
      "the canonical basis map";
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    Restriction r = restrict_global(s.global, s.idem);
    const StructureAlgebra& R = r.action.R();

    // invariance of J(R) is itself one of the claims under test
    if (radical_field_supported(R)) {
      auto rad = jacobson_radical(R);
      bool inv = true;
      std::string w;
      try {
        quotient_action(r.action, rad);
      } catch (const std::exception& ex) {
        inv = false;
        w = ex.what();
      }
      out.push_back(inv ? Finding::confirmed(cfg.suite, key, "J(R) is alpha-invariant",
                                             "dim J = " + std::to_string(rad.size()))
                        : Finding::refuted(cfg.suite, key, "J(R) is alpha-invariant", w));
    }

    // candidate invariant ideals: J(R), the D_g, pairwise sums
    std::vector<std::vector<Vec>> candidates;
    if (radical_field_supported(R)) {
      auto rad = jacobson_radical(R);
      if (!rad.empty()) candidates.push_back(rad);
    }
    for (GElem g : r.action.support) {
      if (g == r.action.group.identity()) continue;
      auto basis = r.action.ideal_of(g).basis;
      if (!basis.empty() && basis.size() < R.dim) candidates.push_back(basis);
    }
    if (candidates.empty()) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim, "no nontrivial ideal candidates"));
      continue;
    }
    size_t checked = 0;
    bool all_ok = true;
    std::string wit;
    for (const auto& cand : candidates) {
      std::string err;
      try {
        err = quotient_iso_check(r.action, cand);
      } catch (const std::exception&) {
        continue;  // not invariant; fine
      }
      ++checked;
      if (!err.empty()) {
        all_ok = false;
        wit = err;
        break;
      }
    }
    if (checked == 0)
      out.push_back(Finding::degenerate(cfg.suite, key, claim, "no invariant candidates"));
    else
      out.push_back(all_ok ? Finding::confirmed(cfg.suite, key, claim,
                                                std::to_string(checked) + " invariant ideals")
                           : Finding::refuted(cfg.suite, key, claim, wit));
  }
  return out;
}

inline std::vector<Finding> suite_globalization(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "globalize/restrict round-trips, T is unital iff finite type, and the Morita fingerprints "
      "(center dimension, semisimplicity) of R*G and T*G agree";
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    opt.allow_twist = false;  // construction handles the untwisted case
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    Restriction r = restrict_global(s.global, s.idem);
    GlobalizeResult gr = globalize(r.action);
    if (!gr.checks.ok()) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, gr.checks.str()));
      continue;
    }
    auto rt = verify_globalization_round_trip(r.action, gr);
    if (!rt.ok()) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, rt.str()));
      continue;
    }
    auto ft = is_finite_type(r.action);
    bool unital =
        vec_eq(gr.pair.global.T().mul(gr.t_identity, gr.pair.global.T().unit), gr.t_identity);
    if (!(ft.finite_type && unital)) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, "T unital iff finite type failed"));
      continue;
    }
    size_t bound = r.action.group.order() * r.action.dim();
    if (gr.pair.global.T().dim > bound) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, "dim T exceeds |G| dim R"));
      continue;
    }
    CrossedProduct rg = build_crossed(r.action);
    CrossedProduct tg = build_crossed(global_as_partial(gr.pair.global));
    size_t zr = center(rg.algebra).size(), zt = center(tg.algebra).size();
    if (zr != zt) {
      out.push_back(Finding::refuted(cfg.suite, key, claim,
                                     "Z(R*G)=" + std::to_string(zr) + " Z(T*G)=" +
                                         std::to_string(zt)));
      continue;
    }
    auto sr = radical_dim_checked(rg.algebra), st = radical_dim_checked(tg.algebra);
    if (!sr || !st) {
      out.push_back(Finding::degenerate(cfg.suite, key, claim,
                                        "center dims agree; no honest radical method for the "
                                        "semisimplicity fingerprint in this characteristic"));
      continue;
    }
    bool fp_ok = (*sr == 0) == (*st == 0);
    out.push_back(fp_ok
                      ? Finding::confirmed(cfg.suite, key, claim,
                                           "dim T=" + std::to_string(gr.pair.global.T().dim) +
                                               " Z-dim=" + std::to_string(zr))
                      : Finding::refuted(cfg.suite, key, claim,
                                         "rad(R*G)=" + std::to_string(*sr) + " rad(T*G)=" +
                                             std::to_string(*st)));
  }
  return out;
}

inline std::vector<Finding> suite_triangular(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "L*G is isomorphic to the triangular algebra (R*G, M, S*G) via the element-matching map";
  // fixture: (K, K, K) with the sign action on the bimodule
  {
    auto Q = std::make_shared<StructureAlgebra>(field_algebra(cfg.field));
    Bimodule bm;
    bm.left_algebra = Q;
    bm.right_algebra = Q;
    bm.dim = 1;
    bm.left_act.push_back(ExactMatrix::identity(1, cfg.field));
    bm.right_act.push_back(ExactMatrix::identity(1, cfg.field));
    TriangularAlgebra L = assemble_triangular(bm);
    TwistedPartialAction act;
    act.algebra = L.algebra;
    act.group = make_cyclic(2);
    act.support = {0, 1};
    act.idem[0] = L.algebra->unit;
    act.idem[1] = L.algebra->unit;
    act.alpha.emplace(0, ExactMatrix::identity(3, cfg.field));
    ExactMatrix neg = ExactMatrix::identity(3, cfg.field);
    neg.at(1, 1) = -Scalar::one(cfg.field);
    act.alpha.emplace(1, std::move(neg));
    if (cfg.field.characteristic() == 2) {
      out.push_back(Finding::degenerate(cfg.suite, "fixture=(K,K,K)-sign", claim,
                                        "sign action is trivial in characteristic 2"));
    } else {
      TriangularIso iso = triangular_crossed_iso(L, act);
      out.push_back(iso.checks.ok()
                        ? Finding::confirmed(cfg.suite, "fixture=(K,K,K)-sign", claim,
                                             "dim " + std::to_string(iso.lhs.dim()))
                        : Finding::refuted(cfg.suite, "fixture=(K,K,K)-sign", claim,
                                           iso.checks.str()));
    }
  }
  // fixture: a non-diagonal bimodule, L = (K^2, K^2 tensor K, K) with the
  // swap acting globally
  {
    auto [L, act] = fixtures::tensor_global_triangular(cfg.field);
    if (!validate_action(act).ok()) {
      out.push_back(Finding::refuted(cfg.suite, "fixture=tensor-swap", claim,
                                     "tensor action invalid"));
    } else {
      TriangularIso iso = triangular_crossed_iso(L, act);
      out.push_back(iso.checks.ok()
                        ? Finding::confirmed(cfg.suite, "fixture=tensor-swap", claim,
                                             "L=(K^2, K^2 (x) K, K), dim " +
                                                 std::to_string(iso.lhs.dim()))
                        : Finding::refuted(cfg.suite, "fixture=tensor-swap", claim,
                                           iso.checks.str()));
    }
  }
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    LabConfig small = cfg;
    small.max_dim = std::min<size_t>(cfg.max_dim, 2);
    small.max_group = std::min<size_t>(cfg.max_group, 3);
    SampleOptions opt;
    opt.allow_twist = false;
    auto s = sample_global(rng, small, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    Restriction r = restrict_global(s.global, s.idem);
    TriangularAlgebra L = assemble_triangular(regular_bimodule(r.action.algebra));
    TwistedPartialAction act = diagonal_extension(r.action, L);
    if (!validate_action(act).ok()) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, "diagonal extension invalid"));
      continue;
    }
    TriangularIso iso = triangular_crossed_iso(L, act);
    out.push_back(iso.checks.ok()
                      ? Finding::confirmed(cfg.suite, key, claim,
                                           "L=(R,R,R), dim " + std::to_string(iso.lhs.dim()))
                      : Finding::refuted(cfg.suite, key, claim, iso.checks.str()));
  }
  return out;
}

inline std::vector<Finding> suite_fixedring(const LabConfig& cfg) {
  std::vector<Finding> out;
  const std::string claim =
      "the partial fixed ring contains 1_R and is multiplicatively closed; for untwisted global "
      "actions the group average projects onto it";
  // fixture: the Z-action with fixed ring spanned by e0 + e1
  {
    TwistedPartialAction a = fixtures::two_idempotents_z(cfg.field);
    auto fr = fixed_ring(a);
    Vec diag = Vec{Scalar::one(cfg.field), Scalar::one(cfg.field)};
    bool ok = fr.size() == 1 && contains(span_of(fr, 2, cfg.field), diag);
    out.push_back(ok ? Finding::confirmed(cfg.suite, "fixture=two-idempotents-Z",
                                          "fixed ring is the diagonal line", "dim 1")
                     : Finding::refuted(cfg.suite, "fixture=two-idempotents-Z",
                                        "fixed ring is the diagonal line",
                                        "dim " + std::to_string(fr.size())));
  }
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    bool want_global = rng.coin();
    opt.full_idempotent = want_global;
    opt.allow_twist = !want_global;
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    Restriction r = restrict_global(s.global, s.idem);
    std::vector<Vec> fr;
    try {
      fr = fixed_ring(r.action);
    } catch (const std::exception& ex) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, ex.what()));
      continue;
    }
    Subspace sp = span_of(fr, r.action.dim(), cfg.field);
    if (!contains(sp, r.action.R().unit)) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, "1_R not in the fixed ring"));
      continue;
    }
    bool global = true;
    for (GElem g : r.action.group.elements())
      if (!r.action.in_support(g) || r.action.ideal_of(g).dim() != r.action.dim()) global = false;
    bool avg_ok = true;
    unsigned long ch = cfg.field.characteristic();
    if (global && !r.action.has_nontrivial_twist() &&
        (ch == 0 || r.action.group.order() % ch != 0)) {
      ExactMatrix P(r.action.dim(), r.action.dim(), cfg.field);
      for (GElem g : r.action.support) P = P + r.action.alpha.at(g);
      P = P.scaled(Scalar::from_long(static_cast<long>(r.action.group.order()), cfg.field)
                       .inverse());
      std::vector<Vec> img;
      for (size_t j = 0; j < r.action.dim(); ++j) img.push_back(P.col(j));
      avg_ok = (P * P == P) && (span_of(img, r.action.dim(), cfg.field) == sp);
      for (const auto& v : sp.basis) avg_ok = avg_ok && vec_eq(P.apply(v), v);
    }
    out.push_back(avg_ok ? Finding::confirmed(cfg.suite, key, claim,
                                              "fixed ring dim " + std::to_string(sp.dim()) +
                                                  (global ? " (global instance)" : ""))
                         : Finding::refuted(cfg.suite, key, claim, "average is not a projection"));
  }
  return out;
}

inline std::vector<Finding> suite_generator(const LabConfig& cfg) {
  // construction-validity property: every sampled instance passes the axioms
  std::vector<Finding> out;
  const std::string claim = "restriction of a sampled global action always passes the axioms";
  for (size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(trial_seed(cfg.seed, t));
    SampleOptions opt;
    auto s = sample_global(rng, cfg, opt);
    std::string key = fp(cfg, t, s.fingerprint);
    auto vg = validate_global(s.global);
    if (!vg.ok()) {
      out.push_back(Finding::refuted(cfg.suite, key, claim, "global invalid: " + vg.str()));
      continue;
    }
    Restriction r = restrict_global(s.global, s.idem);
    auto rep = validate_action(r.action);
    out.push_back(rep.ok() ? Finding::confirmed(cfg.suite, key, claim,
                                                "dim R = " + std::to_string(r.action.dim()))
                           : Finding::refuted(cfg.suite, key, claim, rep.str()));
  }
  return out;
}

}  // namespace labdetail

inline std::vector<std::string> lab_suites() {
  return {"artinian",  "noetherian", "semisimple", "maschke",   "frobenius", "symmetric",
          "subgroup",  "quotient",   "globalization", "triangular", "fixedring", "generator"};
}

inline std::vector<Finding> run_suite(const LabConfig& cfg) {
  cfg.check();
  using namespace labdetail;
  if (cfg.suite == "artinian") return suite_artinian(cfg);
  if (cfg.suite == "noetherian") return suite_noetherian(cfg);
  if (cfg.suite == "semisimple") return suite_semisimple(cfg);
  if (cfg.suite == "maschke") return suite_maschke(cfg);
  if (cfg.suite == "frobenius") return suite_forms(cfg, false);
  if (cfg.suite == "symmetric") return suite_forms(cfg, true);
  if (cfg.suite == "subgroup") return suite_subgroup(cfg);
  if (cfg.suite == "quotient") return suite_quotient(cfg);
  if (cfg.suite == "globalization") return suite_globalization(cfg);
  if (cfg.suite == "triangular") return suite_triangular(cfg);
  if (cfg.suite == "fixedring") return suite_fixedring(cfg);
  if (cfg.suite == "generator") return suite_generator(cfg);
  std::string known;
  for (const auto& s : lab_suites()) known += (known.empty() ? "" : ", ") + s;
  fail("unknown suite '" + cfg.suite + "'; available: " + known);
}

}  // namespace pcp
