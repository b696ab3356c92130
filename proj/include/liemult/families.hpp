#pragma once

#include <random>

#include "liemult/liealgebra.hpp"
#include "liemult/wedge.hpp"

namespace liemult {
namespace families {

template <class F>
LieAlgebra<F> abelian(size_t n, FieldDescriptor fd) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra<F>(n, fd, std::move(labels));
}

// Heisenberg algebra of dimension 2n+1: [x_{2i-1}, x_{2i}] = v, all other
// basis brackets zero.
template <class F>
LieAlgebra<F> heisenberg(size_t n, FieldDescriptor fd) {
  if (n < 1) fail(Errc::ParamConstraint, "heisenberg: n must be >= 1");
  std::vector<std::string> labels;
  for (size_t i = 1; i <= 2 * n; ++i) labels.push_back("x" + std::to_string(i));
  labels.push_back("v");
  LieAlgebra<F> L(2 * n + 1, fd, std::move(labels));
  uint32_t v = static_cast<uint32_t>(2 * n);
  for (uint32_t i = 0; i < n; ++i) L.set_bracket(2 * i, 2 * i + 1, {{v, F(1)}});
  return L;
}

// Position of y_{ij} (i < j, 1-based generator indices) in the basis of the
// freest generalized Heisenberg algebra on d generators: generators first,
// then the y_{ij} in lexicographic order.
inline uint32_t gen_heisenberg_y_pos(size_t d, uint32_t i, uint32_t j) {
  WedgeIndex idx(d);
  return static_cast<uint32_t>(d + idx.pos(i - 1, j - 1));
}

// Free nilpotent of class 2 on d generators: [x_i, x_j] = y_ij for i < j,
// with all y_ij central. dim = d(d+1)/2 and L' = Z(L) of dim d(d-1)/2.
template <class F>
LieAlgebra<F> freest_gen_heisenberg(size_t d, FieldDescriptor fd) {
  if (d < 2) fail(Errc::ParamConstraint, "gen-heisenberg: d must be >= 2");
  WedgeIndex idx(d);
  std::vector<std::string> labels;
  for (size_t i = 1; i <= d; ++i) labels.push_back("x" + std::to_string(i));
  for (size_t k = 0; k < idx.dim(); ++k) {
    auto [i, j] = idx.at(k);
    labels.push_back("y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  }
  LieAlgebra<F> L(d + idx.dim(), fd, std::move(labels));
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = i + 1; j < d; ++j)
      L.set_bracket(i, j, {{static_cast<uint32_t>(d + idx.pos(i, j)), F(1)}});
  return L;
}

template <class F>
struct QuotientFamily {
  LieAlgebra<F> parent;
  Subspace<F> ideal;   // ideal of `parent`
  LieAlgebra<F> quotient;
  Matrix<F> projection;
  Matrix<F> section;
};

// Quotient of L_d by the central ideal generated by the n sums of disjoint
// commutators y_{1,2}+y_{3,4}, y_{5,6}+y_{7,8}, ...; its Bogomolov
// multiplier has dimension exactly n, which makes the family's multiplier
// dimension unbounded. Requires d > 4n.
template <class F>
QuotientFamily<F> paired_commutator_quotient(size_t n, size_t d, FieldDescriptor fd) {
  if (n < 1) fail(Errc::ParamConstraint, "paired-quotient: n must be >= 1");
  if (d <= 4 * n) fail(Errc::ParamConstraint, "paired-quotient: d must exceed 4n");
  LieAlgebra<F> L = freest_gen_heisenberg<F>(d, fd);
  std::vector<std::vector<F>> gens;
  for (size_t k = 0; k < n; ++k) {
    std::vector<F> g(L.dim());
    g[gen_heisenberg_y_pos(d, 4 * k + 1, 4 * k + 2)] = F(1);
    g[gen_heisenberg_y_pos(d, 4 * k + 3, 4 * k + 4)] = F(1);
    gens.push_back(std::move(g));
  }
  auto handle = ideal_closure(L, gens);
  auto q = quotient(L, handle.space);
  return {std::move(L), std::move(handle.space), std::move(q.algebra), std::move(q.projection),
          std::move(q.section)};
}

// Presents H_{2n+1} as a quotient of L_{2n}: the ideal is generated by the
// differences y_{2r-1,2r} - y_{2s-1,2s} and all y_{t,u} with (t,u) not a
// symplectic pair. The quotient's structure constants equal heisenberg(n)'s.
template <class F>
QuotientFamily<F> heisenberg_quotient(size_t n, FieldDescriptor fd) {
  if (n < 1) fail(Errc::ParamConstraint, "heisenberg-quotient: n must be >= 1");
  size_t d = 2 * n;
  LieAlgebra<F> L = freest_gen_heisenberg<F>(d, fd);
  std::vector<std::vector<F>> gens;
  for (uint32_t r = 1; r <= n; ++r)
    for (uint32_t s = r + 1; s <= n; ++s) {
      std::vector<F> g(L.dim());
      g[gen_heisenberg_y_pos(d, 2 * r - 1, 2 * r)] = F(1);
      g[gen_heisenberg_y_pos(d, 2 * s - 1, 2 * s)] = F(-1);
      gens.push_back(std::move(g));
    }
  for (uint32_t t = 1; t <= d; ++t)
    for (uint32_t u = t + 1; u <= d; ++u) {
      if (u == t + 1 && t % 2 == 1) continue;  // (2i-1, 2i)
      std::vector<F> g(L.dim());
      g[gen_heisenberg_y_pos(d, t, u)] = F(1);
      gens.push_back(std::move(g));
    }
  auto handle = ideal_closure(L, gens);
  auto q = quotient(L, handle.space);
  return {std::move(L), std::move(handle.space), std::move(q.algebra), std::move(q.projection),
          std::move(q.section)};
}

// Seeded random class-2 algebra: g generators bracketing into a z-dimensional
// central subspace with coefficients in {-3..3}. The Jacobi identity is
// automatic for class 2, so every output validates.
template <class F>
LieAlgebra<F> random_class2(size_t g, size_t z, uint64_t seed, FieldDescriptor fd) {
  if (g < 2) fail(Errc::ParamConstraint, "random-class2: g must be >= 2");
  if (z < 1 || z > g * (g - 1) / 2)
    fail(Errc::ParamConstraint, "random-class2: need 1 <= z <= g(g-1)/2");
  std::vector<std::string> labels;
  for (size_t i = 1; i <= g; ++i) labels.push_back("x" + std::to_string(i));
  for (size_t i = 1; i <= z; ++i) labels.push_back("z" + std::to_string(i));
  LieAlgebra<F> L(g + z, fd, std::move(labels));
  std::mt19937_64 rng(seed);
  for (uint32_t i = 0; i < g; ++i)
    for (uint32_t j = i + 1; j < g; ++j) {
      typename LieAlgebra<F>::SparseVec v;
      for (uint32_t k = 0; k < z; ++k) {
        long long c = static_cast<long long>(rng() % 7) - 3;
        if (c != 0) v.push_back({static_cast<uint32_t>(g + k), FieldOps<F>::from_int(fd, c)});
      }
      L.set_bracket(i, j, std::move(v));
    }
  return L;
}

// Deterministic corpus used by the sweep command and the test suites.
template <class F>
std::vector<LieAlgebra<F>> seeded_corpus(size_t count, size_t max_dim, uint64_t seed,
                                         FieldDescriptor fd) {
  internal_check(max_dim >= 4, "corpus: max_dim must be >= 4");
  std::vector<LieAlgebra<F>> out;
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < count; ++k) {
    size_t g = 2 + rng() % std::min<size_t>(max_dim - 2, 4);  // 2..5 generators
    size_t zmax = std::min(g * (g - 1) / 2, max_dim - g);
    size_t z = 1 + rng() % zmax;
    out.push_back(random_class2<F>(g, z, rng(), fd));
  }
  return out;
}

}  // namespace families
}  // namespace liemult
