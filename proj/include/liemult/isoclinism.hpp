#pragma once

#include "liemult/families.hpp"
#include "liemult/liealgebra.hpp"
#include "liemult/wedge.hpp"

namespace liemult {

// The pairing (u + Z(L), v + Z(L)) -> [u, v], expressed on the canonical
// central-quotient coordinates with values in coordinates on L'. Rows are
// indexed by the pair basis of the quotient.
template <class F>
struct CommutatorPairing {
  size_t quotient_dim = 0;
  size_t derived_dim = 0;
  WedgeIndex idx{0};
  Matrix<F> values;  // idx.dim() x derived_dim

  std::vector<F> eval(std::span<const F> u, std::span<const F> v) const {
    auto w = idx.wedge(u, v);
    std::vector<F> out(derived_dim);
    for (size_t k = 0; k < idx.dim(); ++k)
      if (!is_zero(w[k]))
        for (size_t c = 0; c < derived_dim; ++c) out[c] += w[k] * values(k, c);
    return out;
  }
};

template <class F>
CommutatorPairing<F> commutator_pairing(const LieAlgebra<F>& L) {
  Subspace<F> Z = center(L);
  Subspace<F> D = derived_subalgebra(L);
  auto qc = Z.quotient_coordinates();
  size_t q = qc.complement.size();

  CommutatorPairing<F> out;
  out.quotient_dim = q;
  out.derived_dim = D.dim();
  out.idx = WedgeIndex(q);
  out.values = Matrix<F>(out.idx.dim(), D.dim());

  auto fill = [&](const Matrix<F>& section, Matrix<F>& dst) {
    for (size_t k = 0; k < out.idx.dim(); ++k) {
      auto [a, b] = out.idx.at(k);
      std::vector<F> ua(L.dim()), ub(L.dim());
      for (size_t r = 0; r < L.dim(); ++r) {
        ua[r] = section(r, a);
        ub[r] = section(r, b);
      }
      auto w = L.bracket(ua, ub);
      auto coords = D.coordinates_of(w);
      for (size_t c = 0; c < D.dim(); ++c) dst(k, c) = coords[c];
    }
  };
  fill(qc.section, out.values);

  // Well-definedness: shifting the section by central elements must not
  // change the pairing.
  if (Z.dim() > 0 && q > 0) {
    Matrix<F> shifted = qc.section;
    for (size_t c = 0; c < q; ++c)
      for (size_t r = 0; r < L.dim(); ++r) {
        F s;
        for (size_t zr = 0; zr < Z.dim(); ++zr) s += Z.basis()(zr, r);
        shifted(r, c) += s;
      }
    Matrix<F> other(out.idx.dim(), D.dim());
    fill(shifted, other);
    internal_check(other == out.values, "commutator pairing depends on the section");
  }
  return out;
}

// An isoclinism witness: alpha carries central-quotient coordinates of L to
// those of K, beta carries L' coordinates to K' coordinates.
template <class F>
struct IsoclinismWitness {
  Matrix<F> alpha;
  Matrix<F> beta;
};

template <class F>
bool verify_isoclinism(const LieAlgebra<F>& L, const LieAlgebra<F>& K,
                       const IsoclinismWitness<F>& w) {
  auto PL = commutator_pairing(L);
  auto PK = commutator_pairing(K);
  if (PL.quotient_dim != PK.quotient_dim || PL.derived_dim != PK.derived_dim)
    fail(Errc::DimensionMismatch, "isoclinism: central-quotient or derived dimensions differ");
  if (w.alpha.rows() != PL.quotient_dim || w.alpha.cols() != PL.quotient_dim ||
      w.beta.rows() != PL.derived_dim || w.beta.cols() != PL.derived_dim)
    fail(Errc::DimensionMismatch, "isoclinism: witness matrices have wrong shape");
  if (rank(w.alpha) != PL.quotient_dim || rank(w.beta) != PL.derived_dim) return false;

  size_t q = PL.quotient_dim;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = a + 1; b < q; ++b) {
      std::vector<F> phi(PL.derived_dim);
      for (size_t c = 0; c < PL.derived_dim; ++c) phi[c] = PL.values(PL.idx.pos(a, b), c);
      auto lhs = w.beta.apply(std::span<const F>(phi));
      std::vector<F> ua(q), ub(q);
      for (size_t r = 0; r < q; ++r) {
        ua[r] = w.alpha(r, a);
        ub[r] = w.alpha(r, b);
      }
      auto rhs = PK.eval(ua, ub);
      if (lhs != rhs) return false;
    }
  return true;
}

// L ⊕ abelian(k) together with the canonical witness. The center gains the
// abelian summand, the derived subalgebra is unchanged, and the canonical
// quotient coordinates line up index-for-index, so both maps are identities.
template <class F>
std::pair<LieAlgebra<F>, IsoclinismWitness<F>> attach_abelian(const LieAlgebra<F>& L, size_t k) {
  LieAlgebra<F> K = direct_sum(L, families::abelian<F>(k, L.field()));
  auto PL = commutator_pairing(L);
  IsoclinismWitness<F> w{Matrix<F>::identity(PL.quotient_dim), Matrix<F>::identity(PL.derived_dim)};
  return {std::move(K), std::move(w)};
}

}  // namespace liemult
