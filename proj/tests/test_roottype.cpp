#include "doctest.h"
#include "gwa/roottype.hpp"
#include "support/generators.hpp"

using namespace gwa;

namespace {
FactoredPoly P(const char* text) { return parse_poly(text); }
Scalar S(const char* text) { return parse_scalar(text); }
using E = ZClass::Entry;
}  // namespace

TEST_CASE("z_classes") {
  auto sig = z_classes(P("h(h+2)"));
  REQUIRE(sig.classes.size() == 1);
  CHECK(sig.classes[0].anchor == Scalar(-2));
  CHECK(sig.classes[0].entries == std::vector<E>{{0, 1}, {2, 1}});

  sig = z_classes(P("h(h-1/2)"));
  REQUIRE(sig.classes.size() == 2);
  CHECK(sig.classes[0].anchor == Scalar(0));
  CHECK(sig.classes[1].anchor == S("1/2"));

  sig = z_classes(P("(h-w)^3"));
  REQUIRE(sig.classes.size() == 1);
  CHECK(sig.classes[0].anchor == S("w"));
  CHECK(sig.classes[0].entries == std::vector<E>{{0, 3}});
}

TEST_CASE("same_type") {
  const FactoredPoly v = P("(h-w)(h+3)^2");
  CHECK(same_type(v, v));
  CHECK(same_type(P("h^2(h-3)"), P("(h+5)^2(h-1)")));
  CHECK_FALSE(same_type(P("h^2(h-1)"), P("h(h-1)^2")));
  CHECK_FALSE(same_type(P("h"), P("(h-1/2)")));
  CHECK(same_type(P("(h-w)(h-w-7)"), P("(h-w+2)(h-w-1)")));
}

TEST_CASE("morita_equivalent") {
  CHECK(morita_equivalent(P("h(h+1)"), P("h(h+2)")) == Scalar(0));
  CHECK_FALSE(morita_equivalent(P("h^2(h-1)"), P("h(h-1)^2")).has_value());
  const auto b = morita_equivalent(P("(h-w)"), P("(h-w-5)"));
  REQUIRE(b.has_value());
  CHECK(same_type(shift(P("(h-w)"), *b), P("(h-w-5)")));
  // b is reported modulo Z.
  CHECK(*b == Scalar(0));
  const auto c = morita_equivalent(P("(h-w)(h-1/2)"), P("h(h-w2)"));
  CHECK_FALSE(c.has_value());
  const auto d = morita_equivalent(P("(h-w)^2(h-w-1)"), P("(h-1/2)^2(h-3/2)"));
  REQUIRE(d.has_value());
  CHECK(same_type(shift(P("(h-w)^2(h-w-1)"), *d), P("(h-1/2)^2(h-3/2)")));
  CHECK_THROWS_AS(morita_equivalent(P("1"), P("h")), domain_error);
}

TEST_CASE("isomorphic") {
  const FactoredPoly v = P("(h-w)(h+3)^2");
  const auto self = isomorphic(v, v);
  REQUIRE(self.has_value());
  CHECK(*self == Isomorphism{Scalar(0), IsoSign::plus});
  CHECK_FALSE(isomorphic(P("h(h+1)"), P("h(h+2)")).has_value());
  const auto all = isomorphisms(P("h(h+1)"), P("h(h-1)"));
  REQUIRE(all.minus.has_value());
  CHECK(*all.minus == Scalar(0));
  REQUIRE(all.plus.has_value());
  CHECK(*all.plus == Scalar(-1));
  const auto iso = isomorphic(P("h(h+1)"), P("h(h-1)"));
  REQUIRE(iso.has_value());
  CHECK(apply_isomorphism(P("h(h+1)"), *iso) == P("h(h-1)"));
  CHECK_FALSE(isomorphic(P("h"), P("h^2")).has_value());
  // Only the anti-graded isomorphism exists here.
  const auto anti = isomorphic(P("h^2(h-1)"), P("h(h-1)^2"));
  REQUIRE(anti.has_value());
  CHECK(anti->sign == IsoSign::minus);
  CHECK(apply_isomorphism(P("h^2(h-1)"), *anti) == P("h(h-1)^2"));
}

TEST_CASE("check_star") {
  CHECK(check_star(Scalar(1), P("h(h+1)")));
  CHECK_FALSE(check_star(Scalar(0), P("h")));
  CHECK(check_star(S("w"), P("h(h-1)")));
  CHECK(check_star(Scalar(0), P("1")));
}

TEST_CASE("property: plus isomorphism implies Morita equivalence") {
  testing::Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const FactoredPoly v1 = testing::random_mixed_poly(rng, 5);
    const FactoredPoly v2 = testing::coin(rng) ? shift(v1, testing::random_translation(rng))
                                               : testing::random_mixed_poly(rng, 5);
    const auto all = isomorphisms(v1, v2);
    if (all.plus) CHECK(morita_equivalent(v1, v2).has_value());
    if (all.plus) CHECK(shift(v1, *all.plus) == v2);
    if (all.minus) CHECK(reflect(v1, *all.minus) == v2);
  }
}
