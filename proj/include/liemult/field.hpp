#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "liemult/errors.hpp"

namespace liemult {

// Exact scalars: arbitrary-precision rationals (always in lowest terms with
// positive denominator) and residues modulo a runtime prime.

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Rationals, PrimeField };

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  uint32_t p = 0;  // present iff PrimeField

  static FieldDescriptor rationals() { return {FieldKind::Rationals, 0}; }
  static FieldDescriptor prime_field(uint32_t p) {
    if (!is_prime_u32(p)) fail(Errc::ParamConstraint, "field modulus must be prime");
    return {FieldKind::PrimeField, p};
  }

  bool operator==(const FieldDescriptor&) const = default;

  std::string name() const {
    return kind == FieldKind::Rationals ? std::string("Q") : "GF(" + std::to_string(p) + ")";
  }
};

// Residue modulo a runtime prime. A value constructed from a bare integer is
// "unbound" (modulus 0) and adopts the modulus of the first bound operand it
// meets; generic code can then write F(0), F(1) without threading a field
// descriptor through every call.
class Fp {
public:
  Fp() = default;
  Fp(long long raw) : v_(raw) {}
  Fp(long long raw, uint32_t p) : p_(p) { v_ = normalize(raw, p); }

  uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  long long residue() const { return v_; }

  void bind(uint32_t p) {
    if (p_ == 0) {
      p_ = p;
      v_ = normalize(v_, p);
    } else if (p_ != p) {
      fail(Errc::Internal, "mixed moduli in prime-field arithmetic");
    }
  }

  friend Fp operator+(Fp a, Fp b) {
    uint32_t m = merge(a, b);
    if (m == 0) return Fp(a.v_ + b.v_);
    return Fp(a.v_ + b.v_, m);
  }
  friend Fp operator-(Fp a, Fp b) {
    uint32_t m = merge(a, b);
    if (m == 0) return Fp(a.v_ - b.v_);
    return Fp(a.v_ - b.v_, m);
  }
  friend Fp operator*(Fp a, Fp b) {
    uint32_t m = merge(a, b);
    if (m == 0) return Fp(a.v_ * b.v_);
    return Fp(a.v_ * b.v_, m);
  }
  friend Fp operator/(Fp a, Fp b) {
    uint32_t m = merge(a, b);
    if (m == 0) {
      if (b.v_ == 1) return a;
      if (b.v_ == -1) return Fp(-a.v_);
      fail(Errc::Internal, "division of unbound residues");
    }
    if (b.v_ == 0) fail(Errc::Internal, "division by zero residue");
    return Fp(a.v_ * inverse_mod(b.v_, m), m);
  }
  Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(-v_, p_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) {
    uint32_t m = merge(a, b);
    if (m == 0) return a.v_ == b.v_;
    return normalize(a.v_, m) == normalize(b.v_, m);
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

private:
  static long long normalize(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  static uint32_t merge(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return a.p_;
    if (a.p_ == 0) {
      a.bind(b.p_);
      return b.p_;
    }
    if (b.p_ == 0) {
      b.bind(a.p_);
      return a.p_;
    }
    fail(Errc::Internal, "mixed moduli in prime-field arithmetic");
  }
  static long long inverse_mod(long long a, uint32_t p) {
    // extended Euclid; p prime and a nonzero mod p
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    internal_check(r == 1, "residue not invertible");
    return t < 0 ? t + p : t;
  }

  long long v_ = 0;
  uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.residue() == 0; }

namespace detail {
inline BigInt parse_integer(std::string_view s) {
  if (s.empty()) fail(Errc::ParseError, "empty scalar");
  size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) fail(Errc::ParseError, "bad scalar '" + std::string(s) + "'");
  for (size_t i = k; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') fail(Errc::ParseError, "bad scalar '" + std::string(s) + "'");
  return BigInt(std::string(s));
}
}  // namespace detail

// Per-scalar-type glue: construction from a descriptor, parsing and printing
// of the "n" / "n/d" string form used by all file formats.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static constexpr FieldKind kind = FieldKind::Rationals;
  static Rational from_int(const FieldDescriptor&, long long v) { return Rational(v); }
  static void bind(const FieldDescriptor&, Rational&) {}
  static Rational parse(const FieldDescriptor&, std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(s));
    BigInt num = detail::parse_integer(s.substr(0, slash));
    BigInt den = detail::parse_integer(s.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(num) / Rational(den);
  }
  static std::string str(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
  }
};

template <>
struct FieldOps<Fp> {
  static constexpr FieldKind kind = FieldKind::PrimeField;
  static Fp from_int(const FieldDescriptor& fd, long long v) { return Fp(v, fd.p); }
  static void bind(const FieldDescriptor& fd, Fp& x) { x.bind(fd.p); }
  static Fp parse(const FieldDescriptor& fd, std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return reduce(fd, detail::parse_integer(s));
    Fp num = reduce(fd, detail::parse_integer(s.substr(0, slash)));
    Fp den = reduce(fd, detail::parse_integer(s.substr(slash + 1)));
    if (is_zero(den)) fail(Errc::ParseError, "denominator vanishes mod " + std::to_string(fd.p));
    return num / den;
  }
  static std::string str(const Fp& x) { return std::to_string(x.residue()); }

private:
  static Fp reduce(const FieldDescriptor& fd, const BigInt& v) {
    return Fp(static_cast<long long>(v % fd.p), fd.p);
  }
};

}  // namespace liemult
