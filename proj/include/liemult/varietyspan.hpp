#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "liemult/liealgebra.hpp"
#include "liemult/wedge.hpp"

namespace liemult {

enum class SaturationMode { Exhaustive, Randomized };
enum class Certainty { Exact, MonteCarlo };

inline const char* to_string(Certainty c) {
  return c == Certainty::Exact ? "exact" : "monte_carlo";
}

struct SaturationConfig {
  SaturationMode mode = SaturationMode::Randomized;
  uint64_t rng_seed = 0;
  unsigned coefficient_bound = 10;
  unsigned stabilization_window = 20;
  unsigned sample_cap = 500;
  uint64_t enumeration_cap = uint64_t(1) << 20;

  static SaturationConfig exhaustive(uint64_t cap = uint64_t(1) << 20) {
    SaturationConfig cfg;
    cfg.mode = SaturationMode::Exhaustive;
    cfg.enumeration_cap = cap;
    return cfg;
  }
};

template <class F>
struct SpanResult {
  Subspace<F> space;
  Certainty certainty = Certainty::Exact;
  uint64_t samples_used = 0;
};

namespace detail {

inline void validate_config(const SaturationConfig& cfg, const FieldDescriptor& fd) {
  if (cfg.stabilization_window < 1) fail(Errc::ConfigInvalid, "stabilization window must be >= 1");
  if (cfg.sample_cap < cfg.stabilization_window)
    fail(Errc::ConfigInvalid, "sample cap must be >= stabilization window");
  if (cfg.coefficient_bound < 1) fail(Errc::ConfigInvalid, "coefficient bound must be >= 1");
  if (cfg.mode == SaturationMode::Exhaustive && fd.kind != FieldKind::PrimeField)
    fail(Errc::ConfigInvalid, "exhaustive enumeration requires a prime field");
}

// Number of projective points of an m-dimensional space over GF(p), i.e. the
// points actually enumerated; nullopt when the count exceeds `cap`.
inline std::optional<uint64_t> projective_point_count(uint32_t p, size_t m, uint64_t cap) {
  unsigned __int128 total = 0, power = 1;
  for (size_t t = 0; t < m; ++t) {
    total += power;
    power *= p;
    if (total > cap) return std::nullopt;
  }
  return static_cast<uint64_t>(total);
}

// Enumerates one representative per projective class: the first nonzero
// coordinate is normalized to 1 and earlier coordinates are zero.
template <class Fn>
void for_each_projective_point(uint32_t p, size_t m, Fn&& fn) {
  std::vector<uint32_t> c(m);
  for (size_t lead = 0; lead < m; ++lead) {
    std::fill(c.begin(), c.end(), 0u);
    c[lead] = 1;
    while (true) {
      fn(static_cast<const std::vector<uint32_t>&>(c));
      size_t k = lead + 1;
      while (k < m && c[k] + 1 == p) c[k++] = 0;
      if (k == m) break;
      ++c[k];
    }
  }
}

// Streams sample vectors through `visit`: first the deterministic seed
// schedule {e_i} + {e_i +- e_j} + center basis, then random small-integer
// combinations until the accumulated dimension is stable for a full window
// or the sample cap is reached. `visit` returns the current dimension.
template <class F, class Visit>
uint64_t run_randomized(const LieAlgebra<F>& L, const Subspace<F>& Z, const SaturationConfig& cfg,
                        Visit&& visit) {
  size_t n = L.dim();
  for (uint32_t i = 0; i < n; ++i) visit(unit_vec<F>(n, i));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j) {
      std::vector<F> v(n);
      v[i] = F(1);
      v[j] = F(1);
      visit(v);
      v[j] = F(-1);
      visit(v);
    }
  for (size_t r = 0; r < Z.dim(); ++r) visit(Z.basis().row_vec(r));

  std::mt19937_64 rng(cfg.rng_seed);
  const long long bound = cfg.coefficient_bound;
  const long long width = 2 * bound + 1;
  uint64_t samples = 0;
  unsigned stable = 0;
  size_t dim = visit(std::vector<F>(n));  // no-op probe for the starting dimension
  while (samples < cfg.sample_cap && stable < cfg.stabilization_window) {
    std::vector<F> x(n);
    for (size_t i = 0; i < n; ++i) {
      long long raw = static_cast<long long>(rng() % width) - bound;
      x[i] = FieldOps<F>::from_int(L.field(), raw);
    }
    size_t now = visit(x);
    ++samples;
    if (now > dim) {
      dim = now;
      stable = 0;
    } else {
      ++stable;
    }
  }
  return samples;
}

// A basis (not canonical) of {y : [x, y] = 0}.
template <class F>
std::vector<std::vector<F>> centralizer_fiber(const LieAlgebra<F>& L, const std::vector<F>& x) {
  return kernel_basis(L.ad(std::span<const F>(x)));
}

}  // namespace detail

// Linear span of {x ^ y : [x, y] = 0} inside the second exterior power.
//
// Exhaustive mode is exact: ad(x) only depends on x modulo the center, and
// x ^ y = (x - z) ^ y + z ^ y with z ^ y a central wedge, so enumerating a
// complement of the center projectively and adding all central wedges covers
// the whole commuting variety over GF(p).
template <class F>
SpanResult<F> commuting_wedge_space(const LieAlgebra<F>& L, const SaturationConfig& cfg) {
  detail::validate_config(cfg, L.field());
  size_t n = L.dim();
  WedgeIndex idx(n);
  EchelonBasis<F> acc(idx.dim());
  Subspace<F> Z = center(L);

  auto add_commuting_wedge = [&](std::span<const F> x, std::span<const F> y) {
    internal_check(is_zero_vec<F>(std::span<const F>(L.bracket(x, y))),
                   "commuting_wedge_space: generating pair does not commute");
    acc.insert(idx.wedge(x, y));
  };
  for (size_t r = 0; r < Z.dim(); ++r) {
    auto z = Z.basis().row_vec(r);
    for (uint32_t j = 0; j < n; ++j) add_commuting_wedge(z, unit_vec<F>(n, j));
  }

  auto add_centralizer_wedges = [&](const std::vector<F>& x) {
    for (const auto& y : detail::centralizer_fiber(L, x)) add_commuting_wedge(x, y);
    return acc.dim();
  };

  if (cfg.mode == SaturationMode::Exhaustive) {
    auto qc = Z.quotient_coordinates();
    size_t m = qc.complement.size();
    auto points = detail::projective_point_count(L.field().p, m, cfg.enumeration_cap);
    if (!points)
      fail(Errc::EnumerationTooLarge, "exhaustive enumeration exceeds the configured cap");
    detail::for_each_projective_point(L.field().p, m, [&](const std::vector<uint32_t>& coords) {
      std::vector<F> x(n);
      for (size_t k = 0; k < m; ++k)
        if (coords[k] != 0) x[qc.complement[k]] = L.from_int(coords[k]);
      add_centralizer_wedges(x);
    });
    return {Subspace<F>::from_echelon(acc), Certainty::Exact, *points};
  }

  uint64_t samples = detail::run_randomized(L, Z, cfg, [&](const std::vector<F>& x) {
    if (is_zero_vec<F>(std::span<const F>(x))) return acc.dim();
    return add_centralizer_wedges(x);
  });
  return {Subspace<F>::from_echelon(acc), Certainty::MonteCarlo, samples};
}

// Linear span of {[x, y] : [x, y] in M}, computed with the same two
// strategies; the fiber for a fixed x is the preimage of M under ad(x).
template <class F>
SpanResult<F> commutator_span_in(const LieAlgebra<F>& L, const Subspace<F>& M,
                                 const SaturationConfig& cfg) {
  detail::validate_config(cfg, L.field());
  if (M.ambient_dim() != L.dim()) fail(Errc::DimensionMismatch, "commutator_span_in: ambient mismatch");
  size_t n = L.dim();
  EchelonBasis<F> acc(n);
  Subspace<F> Z = center(L);
  Matrix<F> mproj = M.quotient_coordinates().projection;

  // For one x the collected values are ad(x) applied to a basis of the fiber
  // {y : [x, y] in M} = ker(proj_M ∘ ad(x)); the ad(x) columns are reused for
  // both the fiber computation and the collected images.
  auto collect = [&](const std::vector<F>& x) {
    if (is_zero_vec<F>(std::span<const F>(x))) return acc.dim();
    Matrix<F> A = L.ad(std::span<const F>(x));
    for (auto& y : kernel_basis(mproj * A)) {
      std::vector<F> img(n);
      for (size_t k = 0; k < n; ++k) {
        if (is_zero(y[k])) continue;
        for (size_t r = 0; r < n; ++r)
          if (!is_zero(A(r, k))) img[r] += y[k] * A(r, k);
      }
      if (is_zero_vec<F>(std::span<const F>(img))) continue;
      internal_check(M.contains(img), "commutator_span_in: collected value escapes M");
      acc.insert(std::move(img));
    }
    return acc.dim();
  };

  if (cfg.mode == SaturationMode::Exhaustive) {
    // [x, y] = [x - z, y] for central z, so a complement of the center
    // carries every commutator; scaling x scales the fiber image.
    auto qc = Z.quotient_coordinates();
    size_t m = qc.complement.size();
    auto points = detail::projective_point_count(L.field().p, m, cfg.enumeration_cap);
    if (!points)
      fail(Errc::EnumerationTooLarge, "exhaustive enumeration exceeds the configured cap");
    detail::for_each_projective_point(L.field().p, m, [&](const std::vector<uint32_t>& coords) {
      std::vector<F> x(n);
      for (size_t k = 0; k < m; ++k)
        if (coords[k] != 0) x[qc.complement[k]] = L.from_int(coords[k]);
      collect(x);
    });
    return {Subspace<F>::from_echelon(acc), Certainty::Exact, *points};
  }

  uint64_t samples = detail::run_randomized(L, Z, cfg, collect);
  return {Subspace<F>::from_echelon(acc), Certainty::MonteCarlo, samples};
}

}  // namespace liemult
