#pragma once

#include "liemult/cohomology.hpp"
#include "liemult/freenilpotent.hpp"

namespace liemult {

// A presentation L = F/R with F free nilpotent of class 3 on a minimal
// generating set of L. For targets of class <= 2 the class-3 truncation is
// harmless: R contains the third term of the lower central series of the
// genuinely free algebra and the commutator span inside R contains the
// fourth, so both sides of the Hopf quotient factor through the truncation.
template <class F>
struct Presentation {
  FreeNilpotent<F> cover;
  Matrix<F> gen_images;  // dim L x d, columns are the chosen generators of L
  Matrix<F> pi;          // dim L x dim F, the induced surjection
  Subspace<F> relations; // R = ker(pi), an ideal of F

  std::vector<F> pi_column(size_t j) const {
    std::vector<F> v(pi.rows());
    for (size_t r = 0; r < pi.rows(); ++r) v[r] = pi(r, j);
    return v;
  }
};

template <class F>
Presentation<F> present(const LieAlgebra<F>& L) {
  auto cls = nilpotency_class(L);
  if (!cls || *cls > 2)
    fail(Errc::ClassTooHigh, "present: free presentation requires a nilpotent algebra of class <= 2");
  Subspace<F> derived = derived_subalgebra(L);
  auto qc = derived.quotient_coordinates();
  unsigned d = static_cast<unsigned>(qc.complement.size());

  Presentation<F> out;
  out.cover = free_nilpotent<F>(d, 3, L.field());
  const auto& FN = out.cover;
  size_t nF = FN.algebra.dim();
  size_t nL = L.dim();

  out.gen_images = Matrix<F>(nL, d);
  for (uint32_t a = 0; a < d; ++a) out.gen_images(qc.complement[a], a) = F(1);

  out.pi = Matrix<F>(nL, nF);
  auto img_col = [&](uint32_t col, const std::vector<F>& v) {
    for (size_t r = 0; r < nL; ++r) out.pi(r, col) = v[r];
  };
  std::vector<std::vector<F>> w(d);
  for (uint32_t a = 0; a < d; ++a) {
    w[a] = unit_vec<F>(nL, qc.complement[a]);
    img_col(FN.gen_pos(a + 1), w[a]);
  }
  for (const auto& [ab, k] : FN.deg2_) {
    (void)k;
    auto [a, b] = ab;
    img_col(FN.deg2_pos(a, b), L.bracket(w[a - 1], w[b - 1]));
  }
  for (const auto& [key, k] : FN.deg3_) {
    (void)k;
    auto [a, bc] = key;
    auto [b, c] = bc;
    img_col(FN.deg3_pos(a, b, c), L.bracket(L.bracket(w[a - 1], w[b - 1]), w[c - 1]));
  }

  internal_check(rank(out.pi) == nL, "present: chosen generators do not generate");
  // pi must be a bracket homomorphism on every basis pair of F.
  for (uint32_t i = 0; i < nF; ++i) {
    for (uint32_t j = i + 1; j < nF; ++j) {
      auto [terms, sign] = FN.algebra.bracket_basis(i, j);
      (void)sign;
      std::vector<F> lhs(nL);
      if (terms)
        for (const auto& t : *terms)
          for (size_t r = 0; r < nL; ++r) lhs[r] += t.c * out.pi(r, t.k);
      auto rhs = L.bracket(out.pi_column(i), out.pi_column(j));
      internal_check(lhs == rhs, "present: pi is not a bracket homomorphism");
    }
  }
  out.relations = kernel(out.pi);
  internal_check(is_ideal(FN.algebra, out.relations), "present: kernel is not an ideal");
  return out;
}

template <class F>
size_t hopf_bogomolov(const LieAlgebra<F>& L, const SaturationConfig& cfg) {
  Presentation<F> P = present(L);
  Subspace<F> Fprime = derived_subalgebra(P.cover.algebra);
  Subspace<F> FR = intersect(Fprime, P.relations);
  SpanResult<F> S = commutator_span_in(P.cover.algebra, P.relations, cfg);
  internal_check(S.space.is_subspace_of(FR), "hopf: commutator span escapes F' ∩ R");
  return FR.dim() - S.space.dim();
}

struct FiveTermReport {
  size_t t1 = 0, t2 = 0, t3 = 0, t4 = 0;
  bool exact = false;  // t1 - t2 + t3 - t4 == 0
  Certainty certainty = Certainty::Exact;
  // How the first term was aligned with the presentation of L.
  static constexpr const char* alignment = "T = preimage of M under the presentation of L";
};

// Dimension form of the five-term sequence for a central-quotient pair:
//   t1 = (R ∩ <K(F) ∩ T>)/<K(F) ∩ R>,  t2 = dim B0(L),
//   t3 = dim B0(L/M),                   t4 = (M ∩ L')/<K(L) ∩ M>,
// with T the preimage of M in the presentation of L.
template <class F>
FiveTermReport check_five_term(const LieAlgebra<F>& L, const Subspace<F>& M,
                               const SaturationConfig& cfg) {
  if (!is_ideal(L, M)) fail(Errc::NotAnIdeal, "five-term: M is not an ideal");
  Presentation<F> P = present(L);
  const LieAlgebra<F>& FA = P.cover.algebra;

  auto qc = M.quotient_coordinates();
  Subspace<F> T = kernel(qc.projection * P.pi);

  SpanResult<F> ST = commutator_span_in(FA, T, cfg);
  SpanResult<F> SR = commutator_span_in(FA, P.relations, cfg);
  internal_check(SR.space.is_subspace_of(intersect(P.relations, ST.space)),
                 "five-term: <K(F) ∩ R> must sit inside R ∩ <K(F) ∩ T>");

  FiveTermReport rep;
  rep.t1 = intersect(P.relations, ST.space).dim() - SR.space.dim();

  auto WL = commuting_wedge_space(L, cfg);
  rep.t2 = bogomolov_cohomological(L, WL).dim_B0;

  auto Q = quotient(L, M);
  auto WQ = commuting_wedge_space(Q.algebra, cfg);
  rep.t3 = bogomolov_cohomological(Q.algebra, WQ).dim_B0;

  SpanResult<F> SM = commutator_span_in(L, M, cfg);
  rep.t4 = intersect(M, derived_subalgebra(L)).dim() - SM.space.dim();

  rep.exact = (rep.t1 + rep.t3 == rep.t2 + rep.t4);
  bool all_exact = ST.certainty == Certainty::Exact && SR.certainty == Certainty::Exact &&
                   WL.certainty == Certainty::Exact && WQ.certainty == Certainty::Exact &&
                   SM.certainty == Certainty::Exact;
  rep.certainty = all_exact ? Certainty::Exact : Certainty::MonteCarlo;
  return rep;
}

}  // namespace liemult
