#pragma once

#include <map>

#include "liemult/liealgebra.hpp"

namespace liemult {

// Free nilpotent Lie algebra of class <= 3 on d generators, on the Hall basis
//   degree 1:  x_a                       (1 <= a <= d)
//   degree 2:  [x_a, x_b]                (a > b)
//   degree 3:  [[x_a, x_b], x_c]         (a > b, c >= b)
// with each degree ordered lexicographically by constituent indices. The
// degree counts d, d(d-1)/2, (d^3-d)/3 match the Witt formula.
template <class F>
struct FreeNilpotent {
  LieAlgebra<F> algebra;
  unsigned generators = 0;
  unsigned nil_class = 0;
  std::vector<uint8_t> degree;  // per basis index

  uint32_t gen_pos(uint32_t a) const { return a - 1; }  // 1-based generator index
  uint32_t deg2_pos(uint32_t a, uint32_t b) const {     // a > b
    return generators + deg2_.at({a, b});
  }
  uint32_t deg3_pos(uint32_t a, uint32_t b, uint32_t c) const {  // a > b, c >= b
    return static_cast<uint32_t>(generators + deg2_.size() + deg3_.at({a, {b, c}}));
  }

  std::map<std::pair<uint32_t, uint32_t>, uint32_t> deg2_;
  std::map<std::pair<uint32_t, std::pair<uint32_t, uint32_t>>, uint32_t> deg3_;
};

template <class F>
FreeNilpotent<F> free_nilpotent(unsigned d, unsigned c, FieldDescriptor fd) {
  if (c < 1 || c > 3) fail(Errc::ClassTooHigh, "free_nilpotent: only classes 1..3 are supported");
  FreeNilpotent<F> out;
  out.generators = d;
  out.nil_class = c;

  std::vector<std::string> labels;
  for (uint32_t a = 1; a <= d; ++a) labels.push_back("x" + std::to_string(a));
  out.degree.assign(d, 1);
  if (c >= 2)
    for (uint32_t a = 1; a <= d; ++a)
      for (uint32_t b = 1; b < a; ++b) {
        // lexicographic by (a, b)
        out.deg2_[{a, b}] = 0;
      }
  uint32_t pos = 0;
  for (auto& [k, v] : out.deg2_) {
    v = pos++;
    labels.push_back("[x" + std::to_string(k.first) + ",x" + std::to_string(k.second) + "]");
    out.degree.push_back(2);
  }
  if (c >= 3)
    for (uint32_t a = 1; a <= d; ++a)
      for (uint32_t b = 1; b < a; ++b)
        for (uint32_t cc = b; cc <= d; ++cc) out.deg3_[{a, {b, cc}}] = 0;
  pos = 0;
  for (auto& [k, v] : out.deg3_) {
    v = pos++;
    labels.push_back("[[x" + std::to_string(k.first) + ",x" + std::to_string(k.second.first) +
                     "],x" + std::to_string(k.second.second) + "]");
    out.degree.push_back(3);
  }

  size_t dim = out.degree.size();
  out.algebra = LieAlgebra<F>(dim, fd, std::move(labels));
  auto& L = out.algebra;

  if (c >= 2)
    for (uint32_t b = 1; b <= d; ++b)
      for (uint32_t a = b + 1; a <= d; ++a) {
        // [x_b, x_a] = -[x_a, x_b]  (basis key has the smaller position first)
        L.set_bracket(out.gen_pos(b), out.gen_pos(a), {{out.deg2_pos(a, b), F(-1)}});
      }

  if (c >= 3)
    for (const auto& [ab, unused] : out.deg2_) {
      (void)unused;
      auto [a, b] = ab;
      for (uint32_t e = 1; e <= d; ++e) {
        // [[x_a, x_b], x_e], rewritten into the Hall basis when e < b via
        // the Jacobi identity: [[a,b],e] = [[a,e],b] - [[b,e],a].
        typename LieAlgebra<F>::SparseVec v;
        if (e >= b) {
          v.push_back({out.deg3_pos(a, b, e), F(1)});
        } else {
          v.push_back({out.deg3_pos(a, e, b), F(1)});
          v.push_back({out.deg3_pos(b, e, a), F(-1)});
        }
        // gen positions always precede deg-2 positions, so store the pair
        // (x_e, h_ab) with the sign flipped.
        for (auto& t : v) t.c = -t.c;
        std::sort(v.begin(), v.end(),
                  [](const auto& x, const auto& y) { return x.k < y.k; });
        L.set_bracket(out.gen_pos(e), out.deg2_pos(a, b), std::move(v));
      }
    }
  return out;
}

// Witt dimension of the degree-k homogeneous component on d generators.
inline size_t witt_dim(unsigned d, unsigned k) {
  switch (k) {
    case 1: return d;
    case 2: return static_cast<size_t>(d) * (d - 1) / 2;
    case 3: return (static_cast<size_t>(d) * d * d - d) / 3;
    default: internal_check(false, "witt_dim: unsupported degree"); return 0;
  }
}

}  // namespace liemult
