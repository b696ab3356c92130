#pragma once

#include <span>
#include <vector>

#include "liemult/matrix.hpp"

namespace liemult {

// Coordinates on the pair basis {e_i ^ e_j : i < j} of the second exterior
// power, ordered lexicographically. Houses both wedge elements and the
// alternating 2-forms dual to them.
class WedgeIndex {
public:
  explicit WedgeIndex(size_t n) : n_(n), pos_(n * n, SIZE_MAX) {
    pairs_.reserve(n * (n - 1) / 2);
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = i + 1; j < n; ++j) {
        pos_[i * n + j] = pairs_.size();
        pairs_.push_back({i, j});
      }
  }

  size_t n() const { return n_; }
  size_t dim() const { return pairs_.size(); }
  std::pair<uint32_t, uint32_t> at(size_t k) const { return pairs_[k]; }
  size_t pos(uint32_t i, uint32_t j) const { return pos_[i * n_ + j]; }

  // acc += c * (e_i ^ e_j), for arbitrary i, j.
  template <class F>
  void add(std::vector<F>& acc, uint32_t i, uint32_t j, const F& c) const {
    if (i == j || is_zero(c)) return;
    if (i < j)
      acc[pos(i, j)] += c;
    else
      acc[pos(j, i)] -= c;
  }

  template <class F>
  std::vector<F> wedge(const std::vector<F>& x, const std::vector<F>& y) const {
    return wedge(std::span<const F>(x), std::span<const F>(y));
  }

  template <class F>
  std::vector<F> wedge(std::span<const F> x, std::span<const F> y) const {
    internal_check(x.size() == n_ && y.size() == n_, "wedge: vector length mismatch");
    std::vector<F> out(dim());
    for (uint32_t i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (uint32_t j = 0; j < n_; ++j) {
        if (i == j || is_zero(y[j])) continue;
        add(out, i, j, F(x[i] * y[j]));
      }
    }
    return out;
  }

private:
  size_t n_;
  std::vector<std::pair<uint32_t, uint32_t>> pairs_;
  std::vector<size_t> pos_;
};

}  // namespace liemult
