#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liemult/subspace.hpp"

namespace liemult {

// Finite-dimensional Lie algebra given by structure constants on a basis.
// Only pairs i<j are stored; [e_j,e_i] = -[e_i,e_j] and [e_i,e_i] = 0 are
// implicit, which keeps antisymmetry structural in every characteristic.
template <class F>
class LieAlgebra {
public:
  using Scalar = F;
  struct Term {
    uint32_t k;
    F c;
    bool operator==(const Term&) const = default;
  };
  using SparseVec = std::vector<Term>;
  using BracketMap = std::map<std::pair<uint32_t, uint32_t>, SparseVec>;

  LieAlgebra() = default;
  LieAlgebra(size_t dim, FieldDescriptor field, std::vector<std::string> labels = {})
      : dim_(dim), field_(field), labels_(std::move(labels)) {
    if (labels_.empty()) {
      labels_.reserve(dim);
      for (size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    }
    internal_check(labels_.size() == dim_, "label count mismatch");
  }

  size_t dim() const { return dim_; }
  const FieldDescriptor& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const BracketMap& brackets() const { return brackets_; }

  void set_bracket(uint32_t i, uint32_t j, SparseVec v) {
    if (!(i < j && j < dim_)) fail(Errc::ParamConstraint, "bracket indices must satisfy i < j < dim");
    SparseVec clean;
    for (auto& t : v) {
      if (t.k >= dim_) fail(Errc::ParamConstraint, "bracket target index out of range");
      FieldOps<F>::bind(field_, t.c);
      if (!is_zero(t.c)) clean.push_back(t);
    }
    std::sort(clean.begin(), clean.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    if (clean.empty())
      brackets_.erase({i, j});
    else
      brackets_[{i, j}] = std::move(clean);
  }

  // [e_i, e_j] for any i, j; nullptr means zero, sign is -1 when i > j.
  std::pair<const SparseVec*, int> bracket_basis(uint32_t i, uint32_t j) const {
    if (i == j) return {nullptr, 1};
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = brackets_.find(key);
    if (it == brackets_.end()) return {nullptr, 1};
    return {&it->second, i < j ? 1 : -1};
  }

  std::vector<F> bracket(std::span<const F> x, std::span<const F> y) const {
    if (x.size() != dim_ || y.size() != dim_)
      fail(Errc::DimensionMismatch, "bracket: vector length mismatch");
    std::vector<F> out(dim_);
    for (const auto& [key, terms] : brackets_) {
      auto [i, j] = key;
      F coeff = x[i] * y[j] - x[j] * y[i];
      if (is_zero(coeff)) continue;
      for (const Term& t : terms) out[t.k] += coeff * t.c;
    }
    return out;
  }

  // [e_i, y] accumulated into a dense vector.
  std::vector<F> bracket_basis_with(uint32_t i, std::span<const F> y) const {
    internal_check(y.size() == dim_, "bracket: vector length mismatch");
    std::vector<F> out(dim_);
    for (const auto& [key, terms] : brackets_) {
      auto [a, b] = key;
      F coeff;
      if (a == i)
        coeff = y[b];
      else if (b == i)
        coeff = -y[a];
      else
        continue;
      if (is_zero(coeff)) continue;
      for (const Term& t : terms) out[t.k] += coeff * t.c;
    }
    return out;
  }

  // Matrix of ad(x): column j holds [x, e_j].
  Matrix<F> ad(std::span<const F> x) const {
    internal_check(x.size() == dim_, "ad: vector length mismatch");
    Matrix<F> m(dim_, dim_);
    for (const auto& [key, terms] : brackets_) {
      auto [i, j] = key;
      if (!is_zero(x[i]))
        for (const Term& t : terms) m(t.k, j) += x[i] * t.c;
      if (!is_zero(x[j]))
        for (const Term& t : terms) m(t.k, i) -= x[j] * t.c;
    }
    return m;
  }

  F from_int(long long v) const { return FieldOps<F>::from_int(field_, v); }

private:
  size_t dim_ = 0;
  FieldDescriptor field_;
  BracketMap brackets_;
  std::vector<std::string> labels_;
};

template <class F>
struct IdealHandle {
  const LieAlgebra<F>* parent = nullptr;
  Subspace<F> space;
};

struct ValidationResult {
  bool ok = true;
  uint32_t i = 0, j = 0, k = 0;  // first failing triple when !ok
  std::string residual;          // printable residual for diagnostics
};

namespace detail {

// Triples i<j<k that can carry a nonzero Jacobi term or cocycle equation:
// at least one of the three pairs has a nonzero bracket.
template <class F, class Fn>
void for_each_active_triple(const LieAlgebra<F>& L, Fn&& fn) {
  std::set<std::array<uint32_t, 3>> seen;
  for (const auto& [key, terms] : L.brackets()) {
    auto [a, b] = key;
    for (uint32_t k = 0; k < L.dim(); ++k) {
      if (k == a || k == b) continue;
      std::array<uint32_t, 3> t{a, b, k};
      std::sort(t.begin(), t.end());
      seen.insert(t);
    }
  }
  for (const auto& t : seen) fn(t[0], t[1], t[2]);
}

}  // namespace detail

template <class F>
ValidationResult validate(const LieAlgebra<F>& L) {
  ValidationResult res;
  detail::for_each_active_triple(L, [&](uint32_t i, uint32_t j, uint32_t k) {
    if (!res.ok) return;
    std::vector<F> acc(L.dim());
    auto add_term = [&](uint32_t a, uint32_t b, uint32_t c) {
      // [[e_a, e_b], e_c]
      auto [terms, sign] = L.bracket_basis(a, b);
      if (!terms) return;
      for (const auto& t : *terms) {
        auto [inner, s2] = L.bracket_basis(t.k, c);
        if (!inner) continue;
        F f = F(sign * s2) * t.c;
        for (const auto& u : *inner) acc[u.k] += f * u.c;
      }
    };
    add_term(i, j, k);
    add_term(j, k, i);
    add_term(k, i, j);
    if (!is_zero_vec<F>(std::span<const F>(acc))) {
      res.ok = false;
      res.i = i;
      res.j = j;
      res.k = k;
      std::string s;
      for (size_t t = 0; t < acc.size(); ++t) {
        if (is_zero(acc[t])) continue;
        if (!s.empty()) s += " + ";
        s += FieldOps<F>::str(acc[t]) + "*" + L.labels()[t];
      }
      res.residual = s;
    }
  });
  return res;
}

template <class F>
Subspace<F> center(const LieAlgebra<F>& L) {
  std::vector<std::vector<F>> rows;
  for (uint32_t i = 0; i < L.dim(); ++i) {
    Matrix<F> adi = L.ad(unit_vec<F>(L.dim(), i));
    for (size_t r = 0; r < adi.rows(); ++r)
      if (!is_zero_vec<F>(adi.row(r))) rows.push_back(adi.row_vec(r));
  }
  if (rows.empty()) return Subspace<F>::full(L.dim());
  return kernel(Matrix<F>::from_rows(rows, L.dim()));
}

template <class F>
Subspace<F> centralizer(const LieAlgebra<F>& L, std::span<const F> x) {
  if (x.size() != L.dim()) fail(Errc::DimensionMismatch, "centralizer: vector length mismatch");
  return kernel(L.ad(x));
}

// {y : [x, y] in M} — the preimage of M under ad(x).
template <class F>
Subspace<F> centralizer_mod(const LieAlgebra<F>& L, std::span<const F> x, const Subspace<F>& M) {
  if (x.size() != L.dim() || M.ambient_dim() != L.dim())
    fail(Errc::DimensionMismatch, "centralizer_mod: dimension mismatch");
  auto qc = M.quotient_coordinates();
  return kernel(qc.projection * L.ad(x));
}

template <class F>
Subspace<F> derived_subalgebra(const LieAlgebra<F>& L) {
  EchelonBasis<F> e(L.dim());
  for (const auto& [key, terms] : L.brackets()) {
    std::vector<F> v(L.dim());
    for (const auto& t : terms) v[t.k] = t.c;
    e.insert(std::move(v));
  }
  return Subspace<F>::from_echelon(e);
}

// gamma_1 = L, gamma_{k+1} = [L, gamma_k]; computed until stabilization.
template <class F>
std::vector<Subspace<F>> lower_central_series(const LieAlgebra<F>& L) {
  std::vector<Subspace<F>> series{Subspace<F>::full(L.dim())};
  while (true) {
    const Subspace<F>& g = series.back();
    EchelonBasis<F> e(L.dim());
    for (size_t r = 0; r < g.dim(); ++r) {
      auto row = g.basis().row_vec(r);
      for (uint32_t i = 0; i < L.dim(); ++i) e.insert(L.bracket_basis_with(i, row));
    }
    Subspace<F> next = Subspace<F>::from_echelon(e);
    if (next == g) break;  // stabilized (non-nilpotent) or already zero
    series.push_back(std::move(next));
    if (series.back().dim() == 0) break;
  }
  return series;
}

template <class F>
std::optional<unsigned> nilpotency_class(const LieAlgebra<F>& L) {
  auto series = lower_central_series(L);
  if (series.back().dim() != 0) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

template <class F>
IdealHandle<F> ideal_closure(const LieAlgebra<F>& L, const std::vector<std::vector<F>>& gens) {
  for (const auto& g : gens)
    if (g.size() != L.dim()) fail(Errc::DimensionMismatch, "ideal_closure: vector length mismatch");
  EchelonBasis<F> e(L.dim());
  for (const auto& g : gens) e.insert(g);
  // saturate: bracket every newly found vector with every basis element
  std::vector<std::vector<F>> frontier = e.rows();
  while (!frontier.empty()) {
    std::vector<std::vector<F>> next;
    for (const auto& v : frontier)
      for (uint32_t i = 0; i < L.dim(); ++i) {
        auto w = L.bracket_basis_with(i, v);
        if (e.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return {&L, Subspace<F>::from_echelon(e)};
}

template <class F>
bool is_ideal(const LieAlgebra<F>& L, const Subspace<F>& s) {
  if (s.ambient_dim() != L.dim()) fail(Errc::DimensionMismatch, "is_ideal: ambient mismatch");
  for (size_t r = 0; r < s.dim(); ++r) {
    auto row = s.basis().row_vec(r);
    for (uint32_t i = 0; i < L.dim(); ++i)
      if (!s.contains(L.bracket_basis_with(i, row))) return false;
  }
  return true;
}

template <class F>
struct QuotientResult {
  LieAlgebra<F> algebra;
  Matrix<F> projection;  // q x n
  Matrix<F> section;     // n x q
};

template <class F>
QuotientResult<F> quotient(const LieAlgebra<F>& L, const Subspace<F>& ideal) {
  if (!is_ideal(L, ideal)) fail(Errc::NotAnIdeal, "quotient: subspace is not an ideal");
  auto qc = ideal.quotient_coordinates();
  size_t q = qc.complement.size();
  std::vector<std::string> labels;
  for (size_t k = 0; k < q; ++k) labels.push_back("q(" + L.labels()[qc.complement[k]] + ")");
  LieAlgebra<F> Q(q, L.field(), std::move(labels));
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = a + 1; b < q; ++b) {
      auto [terms, sign] = L.bracket_basis(static_cast<uint32_t>(qc.complement[a]),
                                           static_cast<uint32_t>(qc.complement[b]));
      if (!terms) continue;
      std::vector<F> v(L.dim());
      for (const auto& t : *terms) v[t.k] = t.c;
      auto pv = qc.projection.apply(std::span<const F>(v));
      typename LieAlgebra<F>::SparseVec sv;
      for (uint32_t k = 0; k < q; ++k)
        if (!is_zero(pv[k])) sv.push_back({k, pv[k]});
      Q.set_bracket(a, b, std::move(sv));
      (void)sign;  // complement indices are increasing, so sign is +1
    }
  return {std::move(Q), std::move(qc.projection), std::move(qc.section)};
}

template <class F>
QuotientResult<F> quotient(const LieAlgebra<F>& L, const IdealHandle<F>& ideal) {
  internal_check(ideal.parent == &L, "quotient: ideal handle bound to a different algebra");
  return quotient(L, ideal.space);
}

template <class F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b) {
  if (a.field() != b.field()) fail(Errc::ParamConstraint, "direct_sum: field mismatch");
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  LieAlgebra<F> s(a.dim() + b.dim(), a.field(), std::move(labels));
  for (const auto& [key, terms] : a.brackets()) s.set_bracket(key.first, key.second, terms);
  uint32_t off = static_cast<uint32_t>(a.dim());
  for (const auto& [key, terms] : b.brackets()) {
    typename LieAlgebra<F>::SparseVec shifted;
    for (const auto& t : terms) shifted.push_back({t.k + off, t.c});
    s.set_bracket(key.first + off, key.second + off, std::move(shifted));
  }
  return s;
}

}  // namespace liemult
