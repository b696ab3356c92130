#include <catch2/catch_amalgamated.hpp>

#include "liemult/families.hpp"
#include "liemult/hopf.hpp"

using namespace liemult;
namespace fam = liemult::families;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
}

TEST_CASE("presentations of small algebras") {
  // abelian(2): the class-3 cover has dim 5 and everything above degree 1 dies
  auto pa = present(fam::abelian<Rational>(2, Q));
  CHECK(pa.cover.algebra.dim() == 5);
  CHECK(pa.relations.dim() == 3);

  // heisenberg(1): rank-nullity on pi
  auto ph = present(fam::heisenberg<Rational>(1, Q));
  CHECK(ph.cover.algebra.dim() == 5);
  CHECK(ph.relations.dim() == 2);

  // L_3: pi kills exactly the degree-3 component of the cover
  auto pl = present(fam::freest_gen_heisenberg<Rational>(3, Q));
  CHECK(pl.cover.algebra.dim() == 3 + 3 + 8);
  CHECK(pl.relations.dim() == 8);
  for (size_t r = 0; r < pl.relations.dim(); ++r) {
    auto row = pl.relations.basis().row_vec(r);
    for (size_t i = 0; i < pl.cover.algebra.dim(); ++i)
      if (!is_zero(row[i])) CHECK(pl.cover.degree[i] == 3);
  }
}

TEST_CASE("presentation rejects high class and non-nilpotent input") {
  auto fn = free_nilpotent<Rational>(2, 3, Q);
  CHECK_THROWS_AS(present(fn.algebra), Error);
  LieAlgebra<Rational> solvable(2, Q);
  solvable.set_bracket(0, 1, {{1, Rational(1)}});
  CHECK_THROWS_AS(present(solvable), Error);
}

TEST_CASE("hopf route vanishing families") {
  SaturationConfig cfg;
  for (size_t d = 2; d <= 5; ++d)
    CHECK(hopf_bogomolov(fam::freest_gen_heisenberg<Rational>(d, Q), cfg) == 0);
  for (size_t n = 1; n <= 3; ++n)
    CHECK(hopf_bogomolov(fam::heisenberg<Rational>(n, Q), cfg) == 0);
}

TEST_CASE("hopf route detects the paired-quotient multiplier") {
  SaturationConfig cfg;
  auto f = fam::paired_commutator_quotient<Rational>(1, 5, Q);
  CHECK(hopf_bogomolov(f.quotient, cfg) == 1);
}

TEST_CASE("hopf agrees with the cocycle route on a seeded corpus") {
  SaturationConfig cfg;
  auto corpus = fam::seeded_corpus<Rational>(6, 7, 2024, Q);
  for (const auto& L : corpus) {
    auto coh = bogomolov_cohomological(L, cfg);
    CHECK(hopf_bogomolov(L, cfg) == coh.dim_B0);
  }
}

TEST_CASE("five-term dimension exactness") {
  SaturationConfig cfg;

  // zero ideal: t1 = t4 = 0 and t2 = t3
  auto H = fam::heisenberg<Rational>(1, Q);
  auto rep0 = check_five_term(H, Subspace<Rational>::zero(3), cfg);
  CHECK(rep0.t1 == 0);
  CHECK(rep0.t4 == 0);
  CHECK(rep0.t2 == rep0.t3);
  CHECK(rep0.exact);

  // L_5 with the paired ideal: (t1, t2, t3, t4) = (0, 0, 1, 1)
  auto f = fam::paired_commutator_quotient<Rational>(1, 5, Q);
  auto rep = check_five_term(f.parent, f.ideal, cfg);
  CHECK(rep.t1 == 0);
  CHECK(rep.t2 == 0);
  CHECK(rep.t3 == 1);
  CHECK(rep.t4 == 1);
  CHECK(rep.exact);
  CHECK(rep.certainty == Certainty::MonteCarlo);

  // L_4 with the heisenberg-quotient ideal at n = 2: M ∩ L' is fully
  // covered by single commutators, so t4 = 0
  auto hq = fam::heisenberg_quotient<Rational>(2, Q);
  auto rep2 = check_five_term(hq.parent, hq.ideal, cfg);
  CHECK(rep2.t4 == 0);
  CHECK(rep2.t2 == 0);
  CHECK(rep2.t3 == 0);
  CHECK(rep2.exact);
}

TEST_CASE("five-term rejects non-ideals") {
  auto H = fam::heisenberg<Rational>(1, Q);
  auto bad = Subspace<Rational>::span({unit_vec<Rational>(3, 0)}, 3);
  CHECK_THROWS_AS(check_five_term(H, bad, SaturationConfig{}), Error);
}
