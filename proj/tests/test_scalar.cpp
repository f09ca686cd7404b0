#include <doctest.h>

#include "pathhom/errors.hpp"
#include "pathhom/scalar.hpp"

using namespace pathhom;

TEST_CASE("rational parsing canonicalizes") {
  Field q = Field::rational();
  CHECK(q.parse_scalar("6/4").to_string() == "3/2");
  CHECK(q.parse_scalar("-3").to_string() == "-3");
  CHECK(q.parse_scalar("4/-2").to_string() == "-2");
  CHECK_THROWS_AS(q.parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(q.parse_scalar("abc"), InputError);
  CHECK_THROWS_AS(q.parse_scalar(""), InputError);
}

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(101);
  Scalar a = f.from_int(-1);
  CHECK(a.residue_value() == 100);
  CHECK((a * a).is_one());
  Scalar half = f.parse_scalar("1/2");
  CHECK((half + half).is_one());
  CHECK((f.from_int(7) * f.from_int(7).inverse()).is_one());
  CHECK_THROWS_AS(f.parse_scalar("1/101"), InputError);
  CHECK(f.parse_scalar("202").is_zero());
}

TEST_CASE("field descriptors") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("gf:32003").modulus() == 32003);
  CHECK(Field::parse("gf:5").name() == "gf:5");
  CHECK_THROWS_AS(Field::parse("gf:2"), InputError);
  CHECK_THROWS_AS(Field::parse("gf:9"), InputError);
  CHECK_THROWS_AS(Field::parse("reals"), InputError);
}

TEST_CASE("mixing fields is a logic error") {
  CHECK_THROWS_AS(Field::rational().one() + Field::prime(5).one(), std::logic_error);
  CHECK_THROWS_AS(Field::prime(7).one() * Field::prime(5).one(), std::logic_error);
}

TEST_CASE("field axioms on a sample") {
  for (Field f : {Field::rational(), Field::prime(5), Field::prime(32003)}) {
    for (long long x = -4; x <= 4; ++x)
      for (long long y = -4; y <= 4; ++y) {
        Scalar a = f.from_int(x), b = f.from_int(y);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
      }
  }
}
