#pragma once

#include <iostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "liemult/cohomology.hpp"
#include "liemult/hopf.hpp"
#include "liemult/isoclinism.hpp"

namespace liemult {

using Json = nlohmann::ordered_json;

// Algebra files:
// {
//   "dim": 3,
//   "field": {"type": "Q"} | {"type": "GF", "p": 5},
//   "labels": ["x1", "x2", "v"],                    (optional)
//   "brackets": [{"i": 0, "j": 1, "value": {"2": "1"}}, ...]
// }
// Scalars are decimal strings, optionally "num/den"; indices are 0-based.

using AlgebraVariant = std::variant<LieAlgebra<Rational>, LieAlgebra<Fp>>;

inline FieldDescriptor parse_field(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    fail(Errc::ParseError, "field: expected {\"type\": \"Q\"} or {\"type\": \"GF\", \"p\": ...}");
  std::string t = j["type"];
  if (t == "Q") return FieldDescriptor::rationals();
  if (t == "GF") {
    if (!j.contains("p") || !j["p"].is_number_unsigned())
      fail(Errc::ParseError, "field: GF requires a prime \"p\"");
    uint64_t p = j["p"];
    if (p < 2 || p > 0x7fffffff || !is_prime_u32(static_cast<uint32_t>(p)))
      fail(Errc::ParseError, "field: p must be a prime below 2^31");
    return FieldDescriptor::prime_field(static_cast<uint32_t>(p));
  }
  fail(Errc::ParseError, "field: unknown type '" + t + "'");
}

inline Json field_to_json(const FieldDescriptor& fd) {
  if (fd.kind == FieldKind::Rationals) return Json{{"type", "Q"}};
  return Json{{"type", "GF"}, {"p", fd.p}};
}

namespace detail {

template <class F>
LieAlgebra<F> parse_algebra_typed(const Json& j, const FieldDescriptor& fd) {
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    fail(Errc::ParseError, "algebra: missing \"dim\"");
  size_t dim = j["dim"];
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
    if (labels.size() != dim) fail(Errc::ParseError, "algebra: label count != dim");
  }
  LieAlgebra<F> L(dim, fd, std::move(labels));
  if (!j.contains("brackets") || !j["brackets"].is_array())
    fail(Errc::ParseError, "algebra: missing \"brackets\" array");
  for (const auto& b : j["brackets"]) {
    if (!b.contains("i") || !b.contains("j") || !b.contains("value"))
      fail(Errc::ParseError, "bracket entry: need i, j, value");
    uint64_t i = b["i"], jj = b["j"];
    if (!(i < jj && jj < dim)) fail(Errc::ParseError, "bracket entry: need i < j < dim");
    auto [existing, sign] = L.bracket_basis(static_cast<uint32_t>(i), static_cast<uint32_t>(jj));
    (void)sign;
    if (existing) fail(Errc::ParseError, "bracket entry: duplicate pair");
    typename LieAlgebra<F>::SparseVec v;
    for (const auto& [key, val] : b["value"].items()) {
      size_t pos = 0;
      unsigned long k = 0;
      try {
        k = std::stoul(key, &pos);
      } catch (...) {
        fail(Errc::ParseError, "bracket value: bad index '" + key + "'");
      }
      if (pos != key.size() || k >= dim) fail(Errc::ParseError, "bracket value: bad index '" + key + "'");
      if (!val.is_string()) fail(Errc::ParseError, "bracket value: scalars must be strings");
      v.push_back({static_cast<uint32_t>(k), FieldOps<F>::parse(fd, val.get<std::string>())});
    }
    L.set_bracket(static_cast<uint32_t>(i), static_cast<uint32_t>(jj), std::move(v));
  }
  return L;
}

}  // namespace detail

inline Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline AlgebraVariant parse_algebra(const Json& j) {
  FieldDescriptor fd = j.contains("field") ? parse_field(j["field"]) : FieldDescriptor::rationals();
  if (fd.kind == FieldKind::Rationals) return detail::parse_algebra_typed<Rational>(j, fd);
  return detail::parse_algebra_typed<Fp>(j, fd);
}

template <class F>
Json algebra_to_json(const LieAlgebra<F>& L) {
  Json j;
  j["dim"] = L.dim();
  j["field"] = field_to_json(L.field());
  j["labels"] = L.labels();
  Json brackets = Json::array();
  for (const auto& [key, terms] : L.brackets()) {
    Json value = Json::object();
    for (const auto& t : terms) value[std::to_string(t.k)] = FieldOps<F>::str(t.c);
    brackets.push_back(Json{{"i", key.first}, {"j", key.second}, {"value", std::move(value)}});
  }
  j["brackets"] = std::move(brackets);
  return j;
}

// Ideal files: {"generators": [["0", "1", ...], ...]} in the parent's basis.
template <class F>
std::vector<std::vector<F>> parse_vectors(const Json& j, const char* key, size_t dim,
                                          const FieldDescriptor& fd) {
  if (!j.contains(key) || !j[key].is_array())
    fail(Errc::ParseError, std::string("missing \"") + key + "\" array");
  std::vector<std::vector<F>> out;
  for (const auto& row : j[key]) {
    if (!row.is_array() || row.size() != dim)
      fail(Errc::ParseError, "vector length must equal the algebra dimension");
    std::vector<F> v;
    for (const auto& s : row) {
      if (!s.is_string()) fail(Errc::ParseError, "vector entries must be scalar strings");
      v.push_back(FieldOps<F>::parse(fd, s.get<std::string>()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Json vectors_to_json(const std::vector<std::vector<F>>& vecs) {
  Json rows = Json::array();
  for (const auto& v : vecs) {
    Json row = Json::array();
    for (const F& x : v) row.push_back(FieldOps<F>::str(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Json matrix_to_json(const Matrix<F>& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(FieldOps<F>::str(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> parse_matrix(const Json& j, const FieldDescriptor& fd) {
  if (!j.is_array()) fail(Errc::ParseError, "matrix: expected an array of rows");
  std::vector<std::vector<F>> rows;
  size_t cols = 0;
  for (const auto& row : j) {
    if (!row.is_array()) fail(Errc::ParseError, "matrix: expected an array of rows");
    std::vector<F> v;
    for (const auto& s : row) v.push_back(FieldOps<F>::parse(fd, s.get<std::string>()));
    if (!rows.empty() && v.size() != cols) fail(Errc::ParseError, "matrix: ragged rows");
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return Matrix<F>::from_rows(rows, cols);
}

inline Json five_term_to_json(const FiveTermReport& r) {
  Json j;
  j["t1"] = r.t1;
  j["t2"] = r.t2;
  j["t3"] = r.t3;
  j["t4"] = r.t4;
  j["alternating_sum_zero"] = r.exact;
  j["certainty"] = to_string(r.certainty);
  j["alignment"] = FiveTermReport::alignment;
  return j;
}

}  // namespace liemult
