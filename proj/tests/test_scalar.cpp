#include "doctest.h"
#include "gwa/scalar.hpp"
#include "support/generators.hpp"

using namespace gwa;

namespace {
Scalar S(const char* text) { return parse_scalar(text); }
}  // namespace

TEST_CASE("sub cancels and keeps symbols apart") {
  CHECK(sub(Scalar(3), Scalar(3)).is_zero());
  CHECK(sub(S("w+5/2"), S("w")) == Scalar(Rational(5, 2)));
  const Scalar d = sub(S("w"), S("w2"));
  CHECK(d.coefficient("w") == 1);
  CHECK(d.coefficient("w2") == -1);
  CHECK(d.constant() == 0);
  CHECK(d.to_string() == "w-w2");
}

TEST_CASE("is_integer") {
  CHECK(is_integer(Scalar(0)));
  CHECK_FALSE(is_integer(S("5/2")));
  CHECK(is_integer(S("w") - S("w")));
  CHECK(is_integer(S("-7")));
  CHECK_FALSE(is_integer(S("w")));
}

TEST_CASE("integer_difference") {
  CHECK(integer_difference(S("7/2"), S("1/2")) == 3);
  CHECK(integer_difference(S("w+2"), S("w")) == 2);
  CHECK_FALSE(integer_difference(S("w"), Scalar(0)).has_value());
  CHECK_FALSE(integer_difference(S("1/3"), Scalar(0)).has_value());
}

TEST_CASE("textual forms round trip") {
  for (const char* text : {"5/2", "w", "w+3", "2*w-1/3", "w1-w2+4", "-w", "0", "-3/7*x+2"}) {
    CAPTURE(text);
    CHECK(parse_scalar(S(text).to_string()) == S(text));
  }
  CHECK(S("2*w - 1/3").to_string() == "2*w-1/3");
  CHECK(S("w1 - w2 + 4").to_string() == "w1-w2+4");
  CHECK(S("1/2*w + w").to_string() == "3/2*w");
}

TEST_CASE("malformed scalars report a position") {
  for (const char* text : {"", "w+", "1/0", "2**w", "h", "3 w", "(1)"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_scalar(text), parse_error);
  }
}

TEST_CASE("mod Z representative") {
  CHECK(S("7/2").mod_z_representative() == S("1/2"));
  CHECK(S("-1/3").mod_z_representative() == S("2/3"));
  CHECK(S("w-5").mod_z_representative() == S("w"));
  CHECK(S("4").mod_z_representative() == Scalar(0));
}

TEST_CASE("property: canonical form and integer differences") {
  testing::Rng rng(11);
  for (int i = 0; i < 400; ++i) {
    const Scalar a = testing::random_root(rng) + testing::random_translation(rng);
    const Scalar b = testing::random_root(rng);
    const Scalar c = testing::random_root(rng);
    CHECK((sub(a, b).is_zero() == (a == b)));
    CHECK(parse_scalar(a.to_string()) == a);
    const auto ab = integer_difference(a, b);
    const auto ba = integer_difference(b, a);
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab) CHECK(*ab == -*ba);
    const auto bc = integer_difference(b, c);
    if (ab && bc) CHECK(integer_difference(a, c) == *ab + *bc);
    CHECK((a.mod_z_representative() == b.mod_z_representative()) == ab.has_value());
  }
}
