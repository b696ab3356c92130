#include <catch2/catch_amalgamated.hpp>

#include "liemult/field.hpp"

using namespace liemult;

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  Rational a = FieldOps<Rational>::parse(FieldDescriptor::rationals(), "6/4");
  CHECK(numerator(a) == 3);
  CHECK(denominator(a) == 2);
  Rational b = FieldOps<Rational>::parse(FieldDescriptor::rationals(), "2/-4");
  CHECK(numerator(b) == -1);
  CHECK(denominator(b) == 2);
  CHECK(FieldOps<Rational>::str(Rational(-7)) == "-7");
  CHECK(FieldOps<Rational>::str(b) == "-1/2");
  CHECK(is_zero(Rational(0)));
  CHECK_FALSE(is_zero(Rational(1, 1000000)));
}

TEST_CASE("rational parse rejects junk") {
  auto fd = FieldDescriptor::rationals();
  CHECK_THROWS_AS(FieldOps<Rational>::parse(fd, ""), Error);
  CHECK_THROWS_AS(FieldOps<Rational>::parse(fd, "1.5"), Error);
  CHECK_THROWS_AS(FieldOps<Rational>::parse(fd, "x"), Error);
  CHECK_THROWS_AS(FieldOps<Rational>::parse(fd, "1/0"), Error);
}

TEST_CASE("prime field arithmetic") {
  auto fd = FieldDescriptor::prime_field(5);
  Fp a = FieldOps<Fp>::from_int(fd, 7);
  CHECK(a.residue() == 2);
  Fp b = FieldOps<Fp>::from_int(fd, -1);
  CHECK(b.residue() == 4);
  CHECK((a * b).residue() == 3);
  CHECK((a / b).residue() == 3);  // 2 * 4^{-1} = 2 * 4 = 8 = 3
  CHECK((a - a).residue() == 0);
  // literals bind to the modulus of the other operand
  Fp two(2);
  CHECK((two + b).residue() == 1);
  CHECK(Fp(1) / b == Fp(4, 5));
  // inverses across the whole field, including p = 2
  for (uint32_t p : {2u, 3u, 7u, 31u}) {
    auto pf = FieldDescriptor::prime_field(p);
    for (uint32_t v = 1; v < p; ++v) {
      Fp x = FieldOps<Fp>::from_int(pf, v);
      CHECK((x * (Fp(1) / x)).residue() == 1);
    }
  }
}

TEST_CASE("prime field parse handles fractions and big values") {
  auto fd = FieldDescriptor::prime_field(7);
  CHECK(FieldOps<Fp>::parse(fd, "10").residue() == 3);
  CHECK(FieldOps<Fp>::parse(fd, "-1/2").residue() == 3);  // -1 * 4 = -4 = 3
  BigInt big("123456789123456789123456789");
  CHECK(FieldOps<Fp>::parse(fd, "123456789123456789123456789").residue() ==
        static_cast<long long>(big % 7));
  CHECK_THROWS_AS(FieldOps<Fp>::parse(fd, "1/7"), Error);
}

TEST_CASE("field descriptors") {
  CHECK(FieldDescriptor::rationals().name() == "Q");
  CHECK(FieldDescriptor::prime_field(13).name() == "GF(13)");
  CHECK_THROWS_AS(FieldDescriptor::prime_field(4), Error);
  CHECK_THROWS_AS(FieldDescriptor::prime_field(1), Error);
}
