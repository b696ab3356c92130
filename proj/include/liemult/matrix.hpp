#pragma once

#include <span>
#include <utility>
#include <vector>

#include "liemult/field.hpp"

namespace liemult {

template <class F>
class Matrix {
public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
      internal_check(rows[r].size() == cols, "row length mismatch");
      for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  F& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<F> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const F> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<F> row_vec(size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    internal_check(cols_ == o.rows_, "matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(r, k);
        if (is_zero(a)) continue;
        for (size_t c = 0; c < o.cols_; ++c) {
          const F& b = o(k, c);
          if (!is_zero(b)) out(r, c) += a * b;
        }
      }
    return out;
  }

  std::vector<F> apply(std::span<const F> v) const {
    internal_check(v.size() == cols_, "matrix-vector shape mismatch");
    std::vector<F> out(rows_);
    for (size_t r = 0; r < rows_; ++r)
      for (size_t c = 0; c < cols_; ++c) {
        const F& a = (*this)(r, c);
        if (!is_zero(a)) out[r] += a * v[c];
      }
    return out;
  }

  bool operator==(const Matrix&) const = default;

private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

template <class F>
bool is_zero_vec(std::span<const F> v) {
  for (const F& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class F>
std::vector<F> unit_vec(size_t n, size_t k) {
  std::vector<F> v(n);
  v[k] = F(1);
  return v;
}

template <class F>
void add_scaled(std::vector<F>& dst, std::span<const F> src, const F& c) {
  internal_check(dst.size() == src.size(), "vector length mismatch");
  if (is_zero(c)) return;
  for (size_t i = 0; i < dst.size(); ++i)
    if (!is_zero(src[i])) dst[i] += c * src[i];
}

template <class F>
struct Rref {
  Matrix<F> mat;
  std::vector<size_t> pivots;
  size_t rank() const { return pivots.size(); }
};

namespace detail {

// Plain Gauss-Jordan; used over prime fields where division is cheap.
template <class F>
Rref<F> rref_gauss_jordan(Matrix<F> m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t pr = r;
    while (pr < m.rows() && is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    F inv = F(1) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (size_t i = r + 1; i < m.rows(); ++i) {
      F f = m(i, c);
      if (is_zero(f)) continue;
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (size_t k = pivots.size(); k-- > 0;) {
    size_t c = pivots[k];
    for (size_t i = 0; i < k; ++i) {
      F f = m(i, c);
      if (is_zero(f)) continue;
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(k, j))) m(i, j) -= f * m(k, j);
    }
  }
  return {std::move(m), std::move(pivots)};
}

// Fraction-free forward elimination (Bareiss) followed by back-substitution.
// Rows are first scaled to integers, so all intermediate forward entries stay
// integral; divisions by the previous pivot are exact.
inline Rref<Rational> rref_fraction_free(Matrix<Rational> m) {
  for (size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (size_t c = 0; c < m.cols(); ++c) l = lcm(l, denominator(m(r, c)));
    if (l != 1) {
      Rational s(l);
      for (size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
    }
  }
  std::vector<size_t> pivots;
  Rational prev(1);
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t pr = r;
    while (pr < m.rows() && is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (size_t j = c; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
    const Rational piv = m(r, c);
    bool unit_step = (piv == prev);
    for (size_t i = r + 1; i < m.rows(); ++i) {
      const Rational f = m(i, c);
      if (is_zero(f)) {
        if (!unit_step)
          for (size_t j = c + 1; j < m.cols(); ++j)
            if (!is_zero(m(i, j))) m(i, j) = Rational(m(i, j) * piv / prev);
        continue;
      }
      for (size_t j = c + 1; j < m.cols(); ++j) {
        if (is_zero(m(r, j))) {
          if (!unit_step && !is_zero(m(i, j))) m(i, j) = Rational(m(i, j) * piv / prev);
        } else {
          m(i, j) = Rational((m(i, j) * piv - f * m(r, j)) / prev);
        }
      }
      m(i, c) = Rational(0);
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  for (size_t k = pivots.size(); k-- > 0;) {
    size_t c = pivots[k];
    Rational inv = Rational(1) / m(k, c);
    for (size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(k, j))) m(k, j) *= inv;
    for (size_t i = 0; i < k; ++i) {
      Rational f = m(i, c);
      if (is_zero(f)) continue;
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(k, j))) m(i, j) -= Rational(f * m(k, j));
    }
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace detail

template <class F>
Rref<F> rref(Matrix<F> m) {
  if constexpr (std::is_same_v<F, Rational>)
    return detail::rref_fraction_free(std::move(m));
  else
    return detail::rref_gauss_jordan(std::move(m));
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

}  // namespace liemult
