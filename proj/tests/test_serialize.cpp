#include <random>

#include "doctest.h"
#include "rigid/error.hpp"
#include "rigid/serialize.hpp"
#include "rigid/verify.hpp"

using namespace rigid;

TEST_CASE("big integers") {
  CHECK(bigint_json(BigInt(-7)) == Json(-7));
  const BigInt big("-98765432109876543210987654321");
  CHECK(bigint_json(big).is_string());
  CHECK(bigint_from_json(bigint_json(big)) == big);
  CHECK(bigint_from_json(Json(12)) == 12);
  CHECK_THROWS_AS(bigint_from_json(Json("12x")), InvalidArgument);
  CHECK_THROWS_AS(bigint_from_json(Json(1.5)), InvalidArgument);
}

TEST_CASE("solvable elements round trip") {
  std::mt19937_64 rng(61);
  for (int n = 0; n <= 3; ++n) {
    for (int i = 0; i < 25; ++i) {
      const auto e = normalize(2, n, random_word(rng, 2));
      const auto j = to_json(e);
      CHECK(solvable_from_json(Json::parse(j.dump())) == e);
    }
  }
  const auto c = to_json(normalize(2, 2, parse_word("[x1,x2]")));
  CHECK(c["m"] == 2);
  CHECK(c["top"]["vec"] == Json({0, 0}));
  CHECK(c["coords"].size() == 2);
  CHECK(to_json(SolvableElement::identity({3, 0})) == Json({{"m", 3}, {"n", 0}}));
}

TEST_CASE("ring elements keep big coefficients exact") {
  const BigInt big("123456789012345678901234567890");
  const auto g = SolvableElement::from_exponents(2, {1, -1});
  const auto r = SolvableRing::monomial(g, big) + SolvableRing::constant({2, 1}, BigInt(3));
  const auto j = to_json(r);
  CHECK(j.dump().find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(ring_from_json(Json::parse(j.dump()), {2, 1}) == r);
}

TEST_CASE("wreath elements round trip") {
  std::mt19937_64 rng(62);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 20; ++i) {
      const auto w = embed_free_solvable(normalize(2, n, random_word(rng, 2)));
      CHECK(wreath_from_json(Json::parse(to_json(w).dump())) == w);
    }
  }
}

TEST_CASE("laurent matrices round trip") {
  LaurentPoly p(2);
  p.add_term({1, -2}, Rational(3, 4));
  p.add_term({0, 0}, Rational(-1));
  const auto m = LaurentMatrix::from_rows({{p, LaurentPoly(2)}, {LaurentPoly::variable(2, 1), p * p}});
  const auto j = to_json(m);
  CHECK(j["variables"] == 2);
  CHECK(laurent_matrix_from_json(Json::parse(j.dump())) == m);
  Json bad = j;
  bad["rows"][0][0][0]["den"] = 0;
  CHECK_THROWS_AS(laurent_matrix_from_json(bad), InvalidArgument);
}

TEST_CASE("solution sets and dimensions") {
  CHECK(to_json(PrincipalDimension{{2, 1}}).dump() == "[2,1]");
  const auto s = solve_ball(make_system({MixedWord::parse("$1")}), 2, 2, 1);
  const auto j = to_json(s);
  CHECK(j["params"]["radius"] == 1);
  CHECK(j["count"] == 1);
  CHECK(j["assignments"][0][0]["top"]["vec"] == Json({0, 0}));
  CHECK(j.dump() == to_json(s).dump());
}
