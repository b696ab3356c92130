#pragma once

#include <algorithm>
#include <vector>

#include "liemult/matrix.hpp"

namespace liemult {

// Incrementally maintained reduced row echelon basis. Rows are kept fully
// reduced against each other at all times, so the row list is literally the
// RREF of everything inserted so far; insertion order does not matter.
template <class F>
class EchelonBasis {
public:
  explicit EchelonBasis(size_t ambient) : ambient_(ambient) {}

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  std::vector<F> reduce(std::vector<F> v) const {
    internal_check(v.size() == ambient_, "ambient dimension mismatch");
    for (size_t k = 0; k < rows_.size(); ++k) {
      size_t p = pivots_[k];
      if (is_zero(v[p])) continue;
      F c = v[p];
      const auto& row = rows_[k];
      for (size_t j = p; j < ambient_; ++j)
        if (!is_zero(row[j])) v[j] -= c * row[j];
    }
    return v;
  }

  bool contains(std::vector<F> v) const { return is_zero_vec<F>(reduce(std::move(v))); }

  // Returns true when the vector enlarged the span.
  bool insert(std::vector<F> v) {
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < ambient_ && is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    F inv = F(1) / v[p];
    for (size_t j = p; j < ambient_; ++j)
      if (!is_zero(v[j])) v[j] = v[j] * inv;
    for (size_t k = 0; k < rows_.size(); ++k) {
      F c = rows_[k][p];
      if (is_zero(c)) continue;
      auto& row = rows_[k];
      for (size_t j = p; j < ambient_; ++j)
        if (!is_zero(v[j])) row[j] -= c * v[j];
    }
    size_t at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
  }

  Matrix<F> basis_matrix() const { return Matrix<F>::from_rows(rows_, ambient_); }

private:
  size_t ambient_;
  std::vector<std::vector<F>> rows_;
  std::vector<size_t> pivots_;
};

// A subspace of a coordinate space, held as the unique RREF basis. Canonical
// form makes equality a plain comparison.
template <class F>
class Subspace {
public:
  Subspace() = default;

  static Subspace zero(size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>(0, ambient);
    return s;
  }
  static Subspace full(size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<F>::identity(ambient);
    s.pivots_.resize(ambient);
    for (size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }
  static Subspace span(const std::vector<std::vector<F>>& vecs, size_t ambient) {
    EchelonBasis<F> e(ambient);
    for (const auto& v : vecs) {
      if (v.size() != ambient) fail(Errc::DimensionMismatch, "span: vector length mismatch");
      e.insert(v);
    }
    return from_echelon(e);
  }
  static Subspace from_echelon(const EchelonBasis<F>& e) {
    Subspace s;
    s.ambient_ = e.ambient_dim();
    s.basis_ = e.basis_matrix();
    s.pivots_ = e.pivots();
    return s;
  }
  static Subspace row_space(const Matrix<F>& m) {
    auto r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.pivots_ = r.pivots;
    s.basis_ = Matrix<F>(r.pivots.size(), m.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i)
      for (size_t c = 0; c < m.cols(); ++c) s.basis_(i, c) = r.mat(i, c);
    return s;
  }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  std::vector<F> reduce(std::vector<F> v) const {
    internal_check(v.size() == ambient_, "ambient dimension mismatch");
    for (size_t k = 0; k < dim(); ++k) {
      size_t p = pivots_[k];
      if (is_zero(v[p])) continue;
      F c = v[p];
      for (size_t j = p; j < ambient_; ++j)
        if (!is_zero(basis_(k, j))) v[j] -= c * basis_(k, j);
    }
    return v;
  }

  bool contains(std::vector<F> v) const {
    if (v.size() != ambient_) fail(Errc::DimensionMismatch, "contains: vector length mismatch");
    return is_zero_vec<F>(reduce(std::move(v)));
  }

  // Coefficients with respect to the RREF basis; input must lie in the space.
  std::vector<F> coordinates_of(std::span<const F> v) const {
    std::vector<F> coords(dim());
    std::vector<F> w(v.begin(), v.end());
    for (size_t k = 0; k < dim(); ++k) {
      coords[k] = w[pivots_[k]];
      if (is_zero(coords[k])) continue;
      for (size_t j = pivots_[k]; j < ambient_; ++j)
        if (!is_zero(basis_(k, j))) w[j] -= coords[k] * basis_(k, j);
    }
    internal_check(is_zero_vec<F>(std::span<const F>(w)), "coordinates_of: vector outside subspace");
    return coords;
  }

  bool is_subspace_of(const Subspace& b) const {
    if (ambient_ != b.ambient_) fail(Errc::DimensionMismatch, "ambient dimension mismatch");
    for (size_t r = 0; r < dim(); ++r)
      if (!b.contains(basis_.row_vec(r))) return false;
    return true;
  }

  bool operator==(const Subspace&) const = default;

  struct QuotientCoords {
    Matrix<F> projection;  // (ambient - dim) x ambient
    Matrix<F> section;     // ambient x (ambient - dim)
    std::vector<size_t> complement;
  };

  // Coordinates on the quotient by this subspace; the complement is the set
  // of non-pivot coordinates, so the choice is canonical.
  QuotientCoords quotient_coordinates() const {
    std::vector<size_t> comp;
    for (size_t c = 0, k = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c)
        ++k;
      else
        comp.push_back(c);
    }
    size_t q = comp.size();
    Matrix<F> proj(q, ambient_), sect(ambient_, q);
    for (size_t k = 0; k < q; ++k) {
      proj(k, comp[k]) = F(1);
      sect(comp[k], k) = F(1);
    }
    for (size_t r = 0; r < dim(); ++r)
      for (size_t k = 0; k < q; ++k)
        if (!is_zero(basis_(r, comp[k]))) proj(k, pivots_[r]) = -basis_(r, comp[k]);
    return {std::move(proj), std::move(sect), std::move(comp)};
  }

private:
  size_t ambient_ = 0;
  Matrix<F> basis_;
  std::vector<size_t> pivots_;
};

// Free-column parametrization of the kernel: independent spanning vectors,
// not in canonical form. Cheaper than kernel() inside saturation loops.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> gens;
  for (size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    std::vector<F> v(m.cols());
    v[j] = F(1);
    for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.mat(k, j);
    gens.push_back(std::move(v));
  }
  return gens;
}

template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  return Subspace<F>::span(kernel_basis(m), m.cols());
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(Errc::DimensionMismatch, "sum: ambient mismatch");
  EchelonBasis<F> e(a.ambient_dim());
  for (size_t r = 0; r < a.dim(); ++r) e.insert(a.basis().row_vec(r));
  for (size_t r = 0; r < b.dim(); ++r) e.insert(b.basis().row_vec(r));
  return Subspace<F>::from_echelon(e);
}

// Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry the
// intersection in their right half.
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(Errc::DimensionMismatch, "intersect: ambient mismatch");
  size_t n = a.ambient_dim();
  Matrix<F> block(a.dim() + b.dim(), 2 * n);
  for (size_t r = 0; r < a.dim(); ++r)
    for (size_t c = 0; c < n; ++c) {
      block(r, c) = a.basis()(r, c);
      block(r, n + c) = a.basis()(r, c);
    }
  for (size_t r = 0; r < b.dim(); ++r)
    for (size_t c = 0; c < n; ++c) block(a.dim() + r, c) = b.basis()(r, c);
  auto rr = rref(std::move(block));
  std::vector<std::vector<F>> gens;
  for (size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] < n) continue;
    std::vector<F> v(n);
    for (size_t c = 0; c < n; ++c) v[c] = rr.mat(r, n + c);
    gens.push_back(std::move(v));
  }
  return Subspace<F>::span(gens, n);
}

// Functionals on the ambient space vanishing on the subspace, in dual-basis
// coordinates.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s) {
  return kernel(s.basis());
}

}  // namespace liemult
