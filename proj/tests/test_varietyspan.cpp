#include <catch2/catch_amalgamated.hpp>

#include "liemult/families.hpp"
#include "liemult/varietyspan.hpp"

using namespace liemult;
namespace fam = liemult::families;

namespace {

const FieldDescriptor Q = FieldDescriptor::rationals();

// Ground-truth oracle: enumerate every vector of GF(p)^n literally and test
// every pair. Only usable for tiny p^n.
template <class Fn>
void for_each_point(uint32_t p, size_t n, Fn&& fn) {
  std::vector<uint32_t> c(n, 0);
  while (true) {
    fn(c);
    size_t k = 0;
    while (k < n && c[k] + 1 == p) c[k++] = 0;
    if (k == n) return;
    ++c[k];
  }
}

Subspace<Fp> brute_commuting_wedges(const LieAlgebra<Fp>& L) {
  uint32_t p = L.field().p;
  size_t n = L.dim();
  WedgeIndex idx(n);
  EchelonBasis<Fp> acc(idx.dim());
  for_each_point(p, n, [&](const std::vector<uint32_t>& cx) {
    std::vector<Fp> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = Fp(cx[i], p);
    for_each_point(p, n, [&](const std::vector<uint32_t>& cy) {
      std::vector<Fp> y(n);
      for (size_t i = 0; i < n; ++i) y[i] = Fp(cy[i], p);
      if (is_zero_vec<Fp>(std::span<const Fp>(L.bracket(x, y)))) acc.insert(idx.wedge(x, y));
    });
  });
  return Subspace<Fp>::from_echelon(acc);
}

Subspace<Fp> brute_commutator_span(const LieAlgebra<Fp>& L, const Subspace<Fp>& M) {
  uint32_t p = L.field().p;
  size_t n = L.dim();
  EchelonBasis<Fp> acc(n);
  for_each_point(p, n, [&](const std::vector<uint32_t>& cx) {
    std::vector<Fp> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = Fp(cx[i], p);
    for_each_point(p, n, [&](const std::vector<uint32_t>& cy) {
      std::vector<Fp> y(n);
      for (size_t i = 0; i < n; ++i) y[i] = Fp(cy[i], p);
      auto v = L.bracket(x, y);
      if (M.contains(v)) acc.insert(std::move(v));
    });
  });
  return Subspace<Fp>::from_echelon(acc);
}

}  // namespace

TEST_CASE("commuting wedges of an abelian algebra fill the exterior square") {
  auto cfg = SaturationConfig{};
  auto r = commuting_wedge_space(fam::abelian<Rational>(4, Q), cfg);
  CHECK(r.space.dim() == 6);
  CHECK(r.certainty == Certainty::MonteCarlo);

  auto fd3 = FieldDescriptor::prime_field(3);
  auto rx = commuting_wedge_space(fam::abelian<Fp>(4, fd3), SaturationConfig::exhaustive());
  CHECK(rx.space.dim() == 6);
  CHECK(rx.certainty == Certainty::Exact);
}

TEST_CASE("exhaustive mode matches the literal pair enumeration") {
  auto fd3 = FieldDescriptor::prime_field(3);
  auto H = fam::heisenberg<Fp>(1, fd3);
  auto exact = commuting_wedge_space(H, SaturationConfig::exhaustive());
  CHECK(exact.space.dim() == 2);
  CHECK(exact.space == brute_commuting_wedges(H));

  auto fd2 = FieldDescriptor::prime_field(2);
  for (uint64_t seed : {3u, 8u}) {
    auto L = fam::random_class2<Fp>(3, 2, seed, fd2);
    auto got = commuting_wedge_space(L, SaturationConfig::exhaustive());
    CHECK(got.space == brute_commuting_wedges(L));
  }
}

TEST_CASE("heisenberg commuting wedges over the rationals") {
  auto H = fam::heisenberg<Rational>(1, Q);
  auto r = commuting_wedge_space(H, SaturationConfig{});
  // dim pinned by the 27-point GF(3) exhaustion above
  CHECK(r.space.dim() == 2);
  WedgeIndex idx(3);
  std::vector<Rational> x1v(idx.dim()), x2v(idx.dim());
  x1v[idx.pos(0, 2)] = 1;
  x2v[idx.pos(1, 2)] = 1;
  CHECK(r.space.contains(x1v));
  CHECK(r.space.contains(x2v));
}

TEST_CASE("commuting wedges contain center wedge basis") {
  for (uint64_t seed : {1u, 4u}) {
    auto L = fam::random_class2<Rational>(4, 2, seed, Q);
    auto r = commuting_wedge_space(L, SaturationConfig{});
    auto Z = center(L);
    WedgeIndex idx(L.dim());
    for (size_t zr = 0; zr < Z.dim(); ++zr)
      for (uint32_t i = 0; i < L.dim(); ++i) {
        auto w = idx.wedge(Z.basis().row(zr),
                           std::span<const Rational>(unit_vec<Rational>(L.dim(), i)));
        CHECK(r.space.contains(w));
      }
    // commuting basis pairs are present
    for (uint32_t i = 0; i < L.dim(); ++i)
      for (uint32_t j = i + 1; j < L.dim(); ++j) {
        auto [terms, sign] = L.bracket_basis(i, j);
        (void)sign;
        if (terms) continue;
        std::vector<Rational> w(idx.dim());
        w[idx.pos(i, j)] = 1;
        CHECK(r.space.contains(w));
      }
  }
}

TEST_CASE("commutator span with M = L recovers the derived subalgebra") {
  auto fd3 = FieldDescriptor::prime_field(3);
  auto L = fam::freest_gen_heisenberg<Fp>(3, fd3);
  auto r = commutator_span_in(L, Subspace<Fp>::full(L.dim()), SaturationConfig::exhaustive());
  CHECK(r.space == derived_subalgebra(L));
  CHECK(r.certainty == Certainty::Exact);

  auto LQ = fam::freest_gen_heisenberg<Rational>(3, Q);
  auto rq = commutator_span_in(LQ, Subspace<Rational>::full(6), SaturationConfig{});
  CHECK(rq.space == derived_subalgebra(LQ));
}

TEST_CASE("paired ideal meets no single commutators") {
  auto fd2 = FieldDescriptor::prime_field(2);
  auto fd3 = FieldDescriptor::prime_field(3);
  for (auto fd : {fd2, fd3}) {
    auto f = fam::paired_commutator_quotient<Fp>(1, 5, fd);
    auto r = commutator_span_in(f.parent, f.ideal, SaturationConfig::exhaustive());
    CHECK(r.space.dim() == 0);
  }
  auto fq = fam::paired_commutator_quotient<Rational>(1, 5, Q);
  auto rq = commutator_span_in(fq.parent, fq.ideal, SaturationConfig{});
  CHECK(rq.space.dim() == 0);
  CHECK(rq.certainty == Certainty::MonteCarlo);
}

TEST_CASE("exhaustive commutator span matches the literal enumeration") {
  auto fd2 = FieldDescriptor::prime_field(2);
  auto L = fam::random_class2<Fp>(3, 2, 17, fd2);
  auto M = ideal_closure(L, {unit_vec<Fp>(L.dim(), 3)}).space;
  auto got = commutator_span_in(L, M, SaturationConfig::exhaustive());
  CHECK(got.space == brute_commutator_span(L, M));
}

TEST_CASE("degenerate ideal gives the zero span") {
  auto hq = fam::heisenberg_quotient<Rational>(1, Q);
  REQUIRE(hq.ideal.dim() == 0);
  auto r = commutator_span_in(hq.parent, hq.ideal, SaturationConfig{});
  CHECK(r.space.dim() == 0);
}

TEST_CASE("saturation is deterministic and monotone in the sample budget") {
  auto L = fam::random_class2<Rational>(5, 3, 31, Q);
  SaturationConfig cfg;
  cfg.rng_seed = 77;
  auto a = commuting_wedge_space(L, cfg);
  auto b = commuting_wedge_space(L, cfg);
  CHECK(a.space == b.space);
  CHECK(a.samples_used == b.samples_used);

  SaturationConfig small = cfg, big = cfg;
  small.sample_cap = 20;
  small.stabilization_window = 20;
  big.sample_cap = 200;
  big.stabilization_window = 200;
  auto rs = commuting_wedge_space(L, small);
  auto rb = commuting_wedge_space(L, big);
  CHECK(rs.space.dim() <= rb.space.dim());
  CHECK(rs.space.is_subspace_of(rb.space));
}

TEST_CASE("config validation") {
  auto L = fam::heisenberg<Rational>(1, Q);
  SaturationConfig cfg;
  cfg.stabilization_window = 0;
  CHECK_THROWS_AS(commuting_wedge_space(L, cfg), Error);
  cfg = SaturationConfig{};
  cfg.sample_cap = 5;  // below the window
  CHECK_THROWS_AS(commuting_wedge_space(L, cfg), Error);
  // exhaustive over the rationals is rejected
  CHECK_THROWS_AS(commuting_wedge_space(L, SaturationConfig::exhaustive()), Error);
  // enumeration past the cap is rejected
  auto fd5 = FieldDescriptor::prime_field(5);
  auto L5 = fam::freest_gen_heisenberg<Fp>(5, fd5);
  auto tiny = SaturationConfig::exhaustive(10);
  CHECK_THROWS_AS(commuting_wedge_space(L5, tiny), Error);
}

TEST_CASE("wedge coordinates") {
  WedgeIndex idx(4);
  CHECK(idx.dim() == 6);
  auto e1 = unit_vec<Rational>(4, 0);
  auto e2 = unit_vec<Rational>(4, 1);
  auto w = idx.wedge<Rational>(e1, e2);
  CHECK(w[idx.pos(0, 1)] == 1);
  size_t nonzero = 0;
  for (auto& c : w)
    if (!is_zero(c)) ++nonzero;
  CHECK(nonzero == 1);

  std::vector<Rational> x{1, 2, -3, 5};
  CHECK(is_zero_vec<Rational>(std::span<const Rational>(idx.wedge<Rational>(x, x))));

  // (e1 + e2) ^ e2 = e1 ^ e2
  std::vector<Rational> s{1, 1, 0, 0};
  CHECK(idx.wedge<Rational>(s, e2) == idx.wedge<Rational>(e1, e2));
}
