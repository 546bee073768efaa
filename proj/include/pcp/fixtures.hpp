// Stock instances used by the lab suites, the test suites and the shipped
// fixture files: the two Z-actions with finite-dimensional crossed products,
// the truncated shift pair, the C3 restriction, and a twisted C2 action.

#pragma once

#include "pcp/globalization.hpp"
#include "pcp/triangular.hpp"

namespace pcp {
namespace fixtures {

/// R = K e0 + K e1 with D_1 = K e1, D_{-1} = K e0, alpha_1(e0) = e1; the
/// Z-action whose crossed product is 4-dimensional.
inline TwistedPartialAction two_idempotents_z(const FieldSpec& f) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(f, 2));
  TwistedPartialAction a;
  a.algebra = R;
  a.group = GroupModel::integers();
  a.support = {-1, 0, 1};
  a.idem[0] = R->unit;
  a.idem[1] = Vec{Scalar::zero(f), Scalar::one(f)};
  a.idem[-1] = Vec{Scalar::one(f), Scalar::zero(f)};
  ExactMatrix m1(2, 2, f);
  m1.at(1, 0) = Scalar::one(f);  // e0 -> e1
  ExactMatrix mm1(2, 2, f);
  mm1.at(0, 1) = Scalar::one(f);  // e1 -> e0
  a.alpha.emplace(0, ExactMatrix::identity(2, f));
  a.alpha.emplace(1, std::move(m1));
  a.alpha.emplace(-1, std::move(mm1));
  return a;
}

/// R = K with the Z-action supported only at 0; the crossed product is R.
inline TwistedPartialAction lone_fiber_z(const FieldSpec& f) {
  auto R = std::make_shared<StructureAlgebra>(field_algebra(f));
  TwistedPartialAction a;
  a.algebra = R;
  a.group = GroupModel::integers();
  a.support = {0};
  a.idem[0] = R->unit;
  a.alpha.emplace(0, ExactMatrix::identity(1, f));
  return a;
}

/// Cyclic coordinate shift on K^n as a global action of C_n.
inline GlobalAction shift_global(const FieldSpec& f, size_t n) {
  auto T = std::make_shared<StructureAlgebra>(product_of_fields(f, n));
  GlobalAction b;
  b.algebra = T;
  b.group = make_cyclic(n);
  for (GElem g = 0; g < static_cast<GElem>(n); ++g) {
    ExactMatrix m(n, n, f);
    for (size_t i = 0; i < n; ++i)
      m.at((i + static_cast<size_t>(g)) % n, i) = Scalar::one(f);
    b.beta.emplace(g, std::move(m));
  }
  return b;
}

/// C3 shifting the coordinates of K^3, restricted to the ideal of the first
/// two coordinates; all D_g are one-dimensional for g != e.
inline Restriction c3_restriction(const FieldSpec& f) {
  GlobalAction b = shift_global(f, 3);
  Vec idem = zero_vec(3, f);
  idem[0] = Scalar::one(f);
  idem[1] = Scalar::one(f);
  return restrict_global(b, idem);
}

/// Shift on the window K^(2w+1) presented as a Z-action (the shift wraps, so
/// it is only a faithful picture of the doubly infinite shift inside the
/// window). Restricting to K e_0 gives the partial action supported at 0.
inline GlobalAction window_shift_z(const FieldSpec& f, size_t half_width = 2) {
  size_t n = 2 * half_width + 1;
  auto T = std::make_shared<StructureAlgebra>(product_of_fields(f, n));
  // relabel so index i stands for e_{i - half_width}
  for (size_t i = 0; i < n; ++i)
    T->basis_names[i] =
        "e" + std::to_string(static_cast<long>(i) - static_cast<long>(half_width));
  GlobalAction b;
  b.algebra = T;
  b.group = GroupModel::integers();
  ExactMatrix shift(n, n, f);
  for (size_t i = 0; i < n; ++i) shift.at((i + 1) % n, i) = Scalar::one(f);
  b.beta.emplace(1, std::move(shift));
  return b;
}

/// The truncated-window pair: the partial action of Z on K e_0 supported at
/// 0, together with the window shift presented as its global action. No
/// finite window is a genuine globalization; verify_enveloping probing past
/// the wrap reports the failure.
inline EnvelopingPair window_shift_pair(const FieldSpec& f, size_t half_width = 2) {
  GlobalAction b = window_shift_z(f, half_width);
  size_t n = 2 * half_width + 1;
  Vec e0 = zero_vec(n, f);
  e0[half_width] = Scalar::one(f);
  Restriction r = restrict_global(b, e0, half_width + 1);
  return EnvelopingPair{r.action, b, r.corner.embed};
}

/// Twisted C2: beta swaps the two coordinates of K^2 and u_{g,g} = -1.
inline GlobalAction twisted_swap_c2(const FieldSpec& f) {
  auto T = std::make_shared<StructureAlgebra>(product_of_fields(f, 2));
  GlobalAction b;
  b.algebra = T;
  b.group = make_cyclic(2);
  b.beta.emplace(0, ExactMatrix::identity(2, f));
  ExactMatrix sw(2, 2, f);
  sw.at(0, 1) = Scalar::one(f);
  sw.at(1, 0) = Scalar::one(f);
  b.beta.emplace(1, std::move(sw));
  Vec minus_one = vec_scale(-Scalar::one(f), T->unit);
  b.twist[{1, 1}] = minus_one;
  return b;
}

/// L = (R, R tensor S, S) with a diagonal global C2 action: the swap on
/// R = K^2, the trivial action on S = K, and their tensor on the middle.
inline std::pair<TriangularAlgebra, TwistedPartialAction> tensor_global_triangular(
    const FieldSpec& f) {
  auto R = std::make_shared<StructureAlgebra>(product_of_fields(f, 2));
  auto S = std::make_shared<StructureAlgebra>(field_algebra(f));
  Bimodule bm = tensor_bimodule(R, S);
  TriangularAlgebra L = assemble_triangular(bm);
  ExactMatrix swap_r(2, 2, f);
  swap_r.at(0, 1) = Scalar::one(f);
  swap_r.at(1, 0) = Scalar::one(f);
  // middle: kron(swap_r, id_S) in the row-major tensor basis
  ExactMatrix big(L.algebra->dim, L.algebra->dim, f);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      if (swap_r.at(i, j).is_zero()) continue;
      big.at(i, j) = swap_r.at(i, j);                          // R corner
      big.at(L.n_off() + i, L.n_off() + j) = swap_r.at(i, j);  // N = R tensor K
    }
  big.at(L.s_off(), L.s_off()) = Scalar::one(f);
  TwistedPartialAction act;
  act.algebra = L.algebra;
  act.group = make_cyclic(2);
  act.support = {0, 1};
  act.idem[0] = L.algebra->unit;
  act.idem[1] = L.algebra->unit;
  act.alpha.emplace(0, ExactMatrix::identity(L.algebra->dim, f));
  act.alpha.emplace(1, std::move(big));
  return {std::move(L), std::move(act)};
}

/// Trivial global action of a finite group on R (beta_g = id, no twist).
inline TwistedPartialAction trivial_action(const AlgebraPtr& R, const GroupModel& g) {
  TwistedPartialAction a;
  a.algebra = R;
  a.group = g;
  for (GElem x : g.elements()) {
    a.support.push_back(x);
    a.idem[x] = R->unit;
    a.alpha.emplace(x, ExactMatrix::identity(R->dim, R->field));
  }
  return a;
}

}  // namespace fixtures
}  // namespace pcp
