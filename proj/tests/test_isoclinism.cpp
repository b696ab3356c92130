#include <catch2/catch_amalgamated.hpp>

#include "liemult/cohomology.hpp"
#include "liemult/families.hpp"
#include "liemult/isoclinism.hpp"

using namespace liemult;
namespace fam = liemult::families;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
}

TEST_CASE("commutator pairing of heisenberg(1) is the symplectic form") {
  auto H = fam::heisenberg<Rational>(1, Q);
  auto P = commutator_pairing(H);
  CHECK(P.quotient_dim == 2);
  CHECK(P.derived_dim == 1);
  // [x1-bar, x2-bar] = v
  std::vector<Rational> u{1, 0}, v{0, 1};
  auto val = P.eval(std::span<const Rational>(u), std::span<const Rational>(v));
  CHECK(val == std::vector<Rational>{Rational(1)});
  auto diag = P.eval(std::span<const Rational>(u), std::span<const Rational>(u));
  CHECK(val.size() == 1);
  CHECK(is_zero(diag[0]));
}

TEST_CASE("commutator pairing of an abelian algebra is empty") {
  auto P = commutator_pairing(fam::abelian<Rational>(3, Q));
  CHECK(P.quotient_dim == 0);
  CHECK(P.derived_dim == 0);
}

TEST_CASE("identity witness verifies on every corpus algebra") {
  std::vector<LieAlgebra<Rational>> corpus;
  corpus.push_back(fam::heisenberg<Rational>(2, Q));
  corpus.push_back(fam::freest_gen_heisenberg<Rational>(3, Q));
  for (uint64_t s : {1u, 2u}) corpus.push_back(fam::random_class2<Rational>(4, 2, s, Q));
  for (const auto& L : corpus) {
    auto P = commutator_pairing(L);
    IsoclinismWitness<Rational> id{Matrix<Rational>::identity(P.quotient_dim),
                                   Matrix<Rational>::identity(P.derived_dim)};
    CHECK(verify_isoclinism(L, L, id));
  }
}

TEST_CASE("scaled beta fails verification away from characteristic 2") {
  auto H = fam::heisenberg<Rational>(1, Q);
  auto P = commutator_pairing(H);
  IsoclinismWitness<Rational> w{Matrix<Rational>::identity(P.quotient_dim),
                                Matrix<Rational>::identity(P.derived_dim)};
  w.beta(0, 0) = 2;
  CHECK_FALSE(verify_isoclinism(H, H, w));
}

TEST_CASE("witness inversion preserves verification") {
  auto H = fam::heisenberg<Rational>(1, Q);
  // alpha = symplectic scaling (2, 1/2) preserves the pairing with beta = id
  Matrix<Rational> alpha(2, 2);
  alpha(0, 0) = 2;
  alpha(1, 1) = Rational(1) / Rational(2);
  IsoclinismWitness<Rational> w{alpha, Matrix<Rational>::identity(1)};
  REQUIRE(verify_isoclinism(H, H, w));
  Matrix<Rational> alpha_inv(2, 2);
  alpha_inv(0, 0) = Rational(1) / Rational(2);
  alpha_inv(1, 1) = 2;
  IsoclinismWitness<Rational> winv{alpha_inv, Matrix<Rational>::identity(1)};
  CHECK(verify_isoclinism(H, H, winv));
}

TEST_CASE("degenerate witnesses are rejected") {
  auto H = fam::heisenberg<Rational>(1, Q);
  IsoclinismWitness<Rational> singular{Matrix<Rational>(2, 2), Matrix<Rational>::identity(1)};
  CHECK_FALSE(verify_isoclinism(H, H, singular));
  IsoclinismWitness<Rational> misshapen{Matrix<Rational>::identity(3), Matrix<Rational>::identity(1)};
  CHECK_THROWS_AS(verify_isoclinism(H, H, misshapen), Error);
  CHECK_THROWS_AS(verify_isoclinism(H, fam::freest_gen_heisenberg<Rational>(3, Q), misshapen),
                  Error);
}

TEST_CASE("attaching an abelian summand is an isoclinism") {
  auto H = fam::heisenberg<Rational>(1, Q);
  auto [K0, w0] = attach_abelian(H, 0);
  CHECK(K0.dim() == 3);
  CHECK(verify_isoclinism(H, K0, w0));

  auto [K, w] = attach_abelian(H, 2);
  CHECK(K.dim() == 5);
  CHECK(center(K).dim() == 3);
  CHECK(verify_isoclinism(H, K, w));

  for (uint64_t s : {4u, 9u}) {
    auto L = fam::random_class2<Rational>(3, 2, s, Q);
    auto [K2, w2] = attach_abelian(L, 3);
    CHECK(verify_isoclinism(L, K2, w2));
  }
}

TEST_CASE("bogomolov dimension is invariant under attaching abelian summands") {
  SaturationConfig cfg;
  std::vector<LieAlgebra<Rational>> corpus;
  corpus.push_back(fam::heisenberg<Rational>(1, Q));
  corpus.push_back(fam::freest_gen_heisenberg<Rational>(3, Q));
  corpus.push_back(fam::paired_commutator_quotient<Rational>(1, 5, Q).quotient);
  for (uint64_t s : {3u, 8u}) corpus.push_back(fam::random_class2<Rational>(4, 2, s, Q));
  for (const auto& L : corpus) {
    size_t base = bogomolov_cohomological(L, cfg).dim_B0;
    for (size_t k : {1, 2}) {
      auto [K, w] = attach_abelian(L, k);
      CHECK(verify_isoclinism(L, K, w));
      CHECK(bogomolov_cohomological(K, cfg).dim_B0 == base);
    }
  }
}
