#pragma once

#include "liemult/varietyspan.hpp"

namespace liemult {

// Alternating 2-forms on L are identified with functionals on the pair basis
// of the second exterior power, so "alternating" is structural and the same
// encoding is valid in characteristic 2.

// Solutions of f([ei,ej],ek) + f([ej,ek],ei) + f([ek,ei],ej) = 0, one linear
// equation per basis triple that touches a nonzero structure constant.
template <class F>
Subspace<F> cocycle_space(const LieAlgebra<F>& L) {
  size_t n = L.dim();
  WedgeIndex idx(n);
  std::vector<std::vector<F>> rows;
  detail::for_each_active_triple(L, [&](uint32_t i, uint32_t j, uint32_t k) {
    std::vector<F> row(idx.dim());
    auto add = [&](uint32_t a, uint32_t b, uint32_t c, int outer_sign) {
      // outer_sign * f([e_a, e_b], e_c)
      auto [terms, sign] = L.bracket_basis(a, b);
      if (!terms) return;
      for (const auto& t : *terms) idx.add(row, t.k, c, F(F(outer_sign * sign) * t.c));
    };
    add(i, j, k, 1);
    add(j, k, i, 1);
    add(i, k, j, -1);  // f([e_k, e_i], e_j) = -f([e_i, e_k], e_j)
    if (!is_zero_vec<F>(std::span<const F>(row))) rows.push_back(std::move(row));
  });
  if (rows.empty()) return Subspace<F>::full(idx.dim());
  return kernel(Matrix<F>::from_rows(rows, idx.dim()));
}

// Span of the forms (x, y) -> -sigma([x, y]) over the dual basis sigma = e_m*.
template <class F>
Subspace<F> coboundary_space(const LieAlgebra<F>& L) {
  size_t n = L.dim();
  WedgeIndex idx(n);
  EchelonBasis<F> e(idx.dim());
  for (uint32_t m = 0; m < n; ++m) {
    std::vector<F> row(idx.dim());
    for (const auto& [key, terms] : L.brackets())
      for (const auto& t : terms)
        if (t.k == m) row[idx.pos(key.first, key.second)] = -t.c;
    e.insert(std::move(row));
  }
  return Subspace<F>::from_echelon(e);
}

template <class F>
size_t schur_multiplier_dim(const LieAlgebra<F>& L) {
  return cocycle_space(L).dim() - coboundary_space(L).dim();
}

// Boundary maps of the exterior-power chain complex with trivial
// coefficients: d2(x^y) = [x,y] and
// d3(x^y^z) = [x,y]^z - [x,z]^y + [y,z]^x.
template <class F>
Matrix<F> d2_matrix(const LieAlgebra<F>& L) {
  size_t n = L.dim();
  WedgeIndex idx(n);
  Matrix<F> d2(n, idx.dim());
  for (const auto& [key, terms] : L.brackets())
    for (const auto& t : terms) d2(t.k, idx.pos(key.first, key.second)) = t.c;
  return d2;
}

template <class F>
Subspace<F> d3_image(const LieAlgebra<F>& L) {
  size_t n = L.dim();
  WedgeIndex idx(n);
  EchelonBasis<F> e(idx.dim());
  detail::for_each_active_triple(L, [&](uint32_t i, uint32_t j, uint32_t k) {
    std::vector<F> v(idx.dim());
    auto add = [&](uint32_t a, uint32_t b, uint32_t c, int outer_sign) {
      // outer_sign * ([e_a, e_b] ^ e_c)
      auto [terms, sign] = L.bracket_basis(a, b);
      if (!terms) return;
      for (const auto& t : *terms) idx.add(v, t.k, c, F(F(outer_sign * sign) * t.c));
    };
    add(i, j, k, 1);
    add(i, k, j, -1);
    add(j, k, i, 1);
    e.insert(std::move(v));
  });
  return Subspace<F>::from_echelon(e);
}

template <class F>
struct CohomologySpaces {
  Subspace<F> Z2, B2;
  SpanResult<F> W;
  size_t dim_H2 = 0;
  size_t dim_B0 = 0;
  Matrix<F> representatives;  // basis of a complement of B2 inside Z2 ∩ Ann(W)
  Certainty certainty = Certainty::Exact;
};

template <class F>
CohomologySpaces<F> bogomolov_cohomological(const LieAlgebra<F>& L, SpanResult<F> W) {
  CohomologySpaces<F> out;
  out.Z2 = cocycle_space(L);
  out.B2 = coboundary_space(L);
  out.W = std::move(W);
  out.certainty = out.W.certainty;
  internal_check(out.B2.is_subspace_of(out.Z2), "coboundaries must be cocycles");
  Subspace<F> ann = annihilator(out.W.space);
  internal_check(out.B2.is_subspace_of(ann), "coboundaries must vanish on commuting wedges");
  Subspace<F> za = intersect(out.Z2, ann);
  out.dim_H2 = out.Z2.dim() - out.B2.dim();
  out.dim_B0 = za.dim() - out.B2.dim();

  EchelonBasis<F> e(za.ambient_dim());
  for (size_t r = 0; r < out.B2.dim(); ++r) e.insert(out.B2.basis().row_vec(r));
  std::vector<std::vector<F>> reps;
  for (size_t r = 0; r < za.dim(); ++r) {
    auto row = za.basis().row_vec(r);
    if (e.insert(row)) reps.push_back(std::move(row));
  }
  out.representatives = Subspace<F>::span(reps, za.ambient_dim()).basis();
  return out;
}

template <class F>
CohomologySpaces<F> bogomolov_cohomological(const LieAlgebra<F>& L, const SaturationConfig& cfg) {
  return bogomolov_cohomological(L, commuting_wedge_space(L, cfg));
}

// Independent homological route: ker d2 / (im d3 + (W ∩ ker d2)). Commuting
// wedges are cycles, so W ∩ ker d2 = W; the intersection is kept as stated.
template <class F>
size_t bogomolov_homological(const LieAlgebra<F>& L, const SpanResult<F>& W) {
  Subspace<F> kd2 = kernel(d2_matrix(L));
  Subspace<F> id3 = d3_image(L);
  Subspace<F> wk = intersect(W.space, kd2);
  return kd2.dim() - sum(id3, wk).dim();
}

template <class F>
size_t bogomolov_homological(const LieAlgebra<F>& L, const SaturationConfig& cfg) {
  return bogomolov_homological(L, commuting_wedge_space(L, cfg));
}

}  // namespace liemult
