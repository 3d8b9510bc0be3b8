#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rigid/error.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/verify.hpp"

using namespace rigid;

namespace {

SolvableElement nf(int m, int n, const char* text) { return normalize(m, n, parse_word(text)); }

SolvableElement b(std::int64_t e1, std::int64_t e2) {
  return SolvableElement::from_exponents(2, {e1, e2});
}

// All free-group words of length <= r over m generators.
void all_words(int m, int r, std::vector<Word>& out) {
  std::vector<std::vector<int>> layer{{}};
  out.emplace_back();
  for (int len = 1; len <= r; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer) {
      for (int l = -m; l <= m; ++l) {
        if (l == 0) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(v);
        out.emplace_back(v);
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(nf(2, 1, "x1 x2 X1").exponents() == std::vector<std::int64_t>{0, 1});
  const auto c = nf(2, 2, "[x1,x2]");
  CHECK(c.matrix().top.is_identity());
  CHECK(c.matrix().coords[0] ==
        SolvableRing::monomial(b(0, 1)) - SolvableRing::constant({2, 1}, BigInt(1)));
  CHECK(c.matrix().coords[1] ==
        SolvableRing::constant({2, 1}, BigInt(1)) - SolvableRing::monomial(b(1, 0)));
  CHECK(is_trivial(nf(2, 2, "[[x1,x2],[x1,x2]]")));
  CHECK(nf(2, 0, "x1 x2").is_identity());
  CHECK(nf(3, 2, "").is_identity());
  CHECK_THROWS_AS(nf(2, 2, "x3"), InvalidArgument);
  CHECK_THROWS_AS(normalize(0, 2, Word()), InvalidArgument);
  CHECK_THROWS_AS(normalize(2, -1, Word()), InvalidArgument);
}

TEST_CASE("the x1 x2 X1 X2 word") {
  // x1 x2 X1 X2 = [X1, X2] under [a,b] = a^-1 b^-1 a b.
  const auto e = nf(2, 2, "x1 x2 X1 X2");
  CHECK(e == nf(2, 2, "[X1,X2]"));
  CHECK_FALSE(is_trivial(e));
  CHECK(e.matrix().top.is_identity());
  CHECK(e.matrix().coords[0] ==
        SolvableRing::monomial(b(-1, 0)) - SolvableRing::monomial(b(-1, -1)));
  CHECK(e.matrix().coords[1] ==
        SolvableRing::monomial(b(-1, -1)) - SolvableRing::monomial(b(0, -1)));
}

TEST_CASE("word problem") {
  CHECK(is_trivial(nf(2, 2, "x1 x2 X1 X2 x2 x1 X2 X1")));
  CHECK_FALSE(is_trivial(nf(2, 2, "[x1,x2]")));
  CHECK(is_trivial(nf(2, 2, "[[x1,x2],[x1,x2]^x1]")));
  CHECK_FALSE(is_trivial(nf(2, 3, "[[x1,x2],[x1,x2]^x1]")));
  CHECK(is_trivial(nf(2, 3, "[[[x1,x2],[x1,x2]^x1],[[x1,x2]^x2,[x1,x2]^x1]]")));
  CHECK_FALSE(is_trivial(nf(2, 4, "[[[x1,x2],[x1,x2]^x1],[[x1,x2]^x2,[x1,x2]^x1]]")));
}

TEST_CASE("group laws") {
  std::mt19937_64 rng(21);
  for (int n : {1, 2, 3}) {
    for (int i = 0; i < 30; ++i) {
      const auto u = random_word(rng, 2), v = random_word(rng, 2), w = random_word(rng, 2);
      const auto a = normalize(2, n, u), bb = normalize(2, n, v), c = normalize(2, n, w);
      CHECK(normalize(2, n, u * v) == a * bb);
      CHECK((a * bb) * c == a * (bb * c));
      CHECK(is_trivial(a * a.inverse()));
      CHECK(a.inverse() == normalize(2, n, u.inverse()));
      CHECK(commutator(a, bb) == normalize(2, n, commutator(u, v)));
      CHECK(conjugate(a, bb) == normalize(2, n, conjugate(u, v)));
      CHECK(power(a, 3) == normalize(2, n, u.power(3)));
      CHECK(power(a, -2) == normalize(2, n, u.power(-2)));
      CHECK(power(a, 0).is_identity());
    }
  }
}

TEST_CASE("soundness against finite solvable groups") {
  // Words trivial in S(2,n) vanish in every finite group of derived length <= n,
  // and words that survive in such a group are nontrivial in S(2,n).
  std::mt19937_64 rng(22);
  const auto groups = oracle::solvable_groups();
  std::vector<Word> words{parse_word("[[x1,x2],[x1,x2]^x1]"),
                          parse_word("[[x1,x2]^x2,[x1,x2]^(x1 x2)]"),
                          parse_word("[[[x1,x2],[x1,x2]^x1],[[x1,x2]^x2,[x1,x2]^x1]]")};
  for (int i = 0; i < 60; ++i) {
    words.push_back(commutator(random_word(rng, 2, 6), random_word(rng, 2, 6)));
    words.push_back(commutator(words.back(), commutator(random_word(rng, 2, 4), random_word(rng, 2, 4))));
  }
  int witnessed = 0;
  for (const auto& w : words) {
    for (int n : {2, 3}) {
      const bool trivial = is_trivial(normalize(2, n, w));
      for (const auto& g : groups) {
        if (g.derived_length > n) continue;
        for (int t = 0; t < 8; ++t) {
          const std::vector<oracle::Perm> gens{oracle::random_element(rng, g),
                                               oracle::random_element(rng, g)};
          const bool dies =
              oracle::eval(w, gens) == oracle::perm_identity(static_cast<int>(gens[0].size()));
          if (trivial) CHECK(dies);
          if (!dies) {
            CHECK_FALSE(trivial);
            ++witnessed;
          }
        }
      }
    }
  }
  CHECK(witnessed > 0);
}

TEST_CASE("project") {
  CHECK(project(nf(2, 2, "[x1,x2]"), 1) == b(0, 0));
  CHECK(project(nf(2, 3, "x1"), 1) == b(1, 0));
  CHECK(project(nf(2, 3, "x1 x2"), 0).is_identity());
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto w = random_word(rng, 2);
    const auto e = normalize(2, 3, w);
    CHECK(project(e, 3) == e);
    CHECK(project(e, 2) == normalize(2, 2, w));
    CHECK(project(e, 1) == normalize(2, 1, w));
  }
  CHECK_THROWS_AS(project(nf(2, 2, "x1"), 3), InvalidArgument);
  CHECK_THROWS_AS(project(nf(2, 2, "x1"), -1), InvalidArgument);
}

TEST_CASE("series membership") {
  const auto c = nf(2, 2, "[x1,x2]");
  const auto x1 = nf(2, 2, "x1");
  CHECK(series_member_projection(c, 2));
  CHECK_FALSE(series_member_projection(x1, 2));
  CHECK(series_member_projection(x1, 1));
  CHECK_FALSE(series_member_projection(c, 3));
  CHECK_THROWS_AS(series_member_projection(c, 0), InvalidArgument);
  CHECK_THROWS_AS(series_member_projection(c, 4), InvalidArgument);

  const std::vector<SolvableElement> g2{c};
  CHECK(series_member_commutator(c, 2, g2));
  CHECK_FALSE(series_member_commutator(x1, 2, g2));
  CHECK_FALSE(is_trivial(commutator(x1, c)));
  const std::vector<SolvableElement> bad{x1};
  CHECK_THROWS_WITH_AS(series_member_commutator(c, 2, bad), doctest::Contains("invalid witness"),
                       InvalidArgument);
  const std::vector<SolvableElement> none;
  CHECK_THROWS_AS(series_member_commutator(c, 2, none), InvalidArgument);
}

TEST_CASE("series witnesses and criterion agreement") {
  const auto ws = series_witnesses(2, 3);
  REQUIRE(ws.size() == 3);
  for (int j = 1; j <= 3; ++j) {
    CHECK(series_member_projection(ws[j - 1], j));
    CHECK_FALSE(series_member_projection(ws[j - 1], j + 1));
  }
  CHECK_THROWS_AS(series_witnesses(1, 2), InvalidArgument);
  CHECK(series_witnesses(1, 1).size() == 1);

  std::mt19937_64 rng(24);
  const std::span<const SolvableElement> span(ws);
  for (int s = 0; s < 30; ++s) {
    Word w = random_word(rng, 2);
    if (s % 3 == 1) w = commutator(w, random_word(rng, 2));
    if (s % 3 == 2) {
      w = commutator(commutator(w, random_word(rng, 2)),
                     commutator(random_word(rng, 2), random_word(rng, 2)));
    }
    const auto e = normalize(2, 3, w);
    for (int i = 1; i <= 4; ++i) {
      CHECK(series_member_projection(e, i) == series_member_commutator(e, i, span.subspan(i - 1)));
      // G_i contains G_{i+1}
      if (i <= 3 && series_member_projection(e, i + 1)) CHECK(series_member_projection(e, i));
    }
  }
}

TEST_CASE("ball enumeration") {
  CHECK(ball_enumerate(1, 1, 2).size() == 5);
  CHECK(ball_enumerate(2, 1, 1).size() == 5);
  CHECK(ball_enumerate(2, 2, 0).size() == 1);
  const auto ball = ball_enumerate(2, 2, 2);
  CHECK(ball.size() == 17);
  CHECK(std::is_sorted(ball.begin(), ball.end()));

  // brute force: normalize every word of length <= r and dedupe
  for (int r : {2, 3}) {
    std::vector<Word> words;
    all_words(2, r, words);
    std::set<std::string> keys;
    for (const auto& w : words) keys.insert(normalize(2, 2, w).key());
    const auto got = ball_enumerate(2, 2, r);
    std::set<std::string> got_keys;
    for (const auto& e : got) got_keys.insert(e.key());
    CHECK(got_keys == keys);
    CHECK(got.size() == keys.size());
  }
  CHECK(ball_enumerate(2, 2, 3) == ball_enumerate(2, 2, 3));
  CHECK_THROWS_AS(ball_enumerate(2, 2, 6, 100), CapExceeded);
  CHECK_THROWS_AS(ball_enumerate(2, 2, -1), InvalidArgument);
}

TEST_CASE("module action") {
  const auto c = nf(2, 2, "[x1,x2]");
  // u = b1 - 1
  const std::vector<ActionTerm> u{{nf(2, 2, "x1"), 1}, {SolvableElement::identity({2, 2}), -1}};
  const auto cu = act(c, u);
  CHECK_FALSE(is_trivial(cu));
  // coordinates of c^u are the coordinates of c times u
  const auto one = SolvableRing::constant({2, 1}, BigInt(1));
  const auto ub = SolvableRing::monomial(b(1, 0)) - one;
  CHECK(cu.matrix().coords[0] == c.matrix().coords[0] * ub);
  CHECK(cu.matrix().coords[1] == c.matrix().coords[1] * ub);

  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const auto h = random_word(rng, 2);
    const std::vector<ActionTerm> single{{normalize(2, 2, h), 2}};
    const auto r = act(c, single);
    const auto hb = SolvableRing::monomial(normalize(2, 1, h)).scaled(BigInt(2));
    CHECK(r.matrix().coords[0] == c.matrix().coords[0] * hb);
  }
}

TEST_CASE("element accessors and keys") {
  const auto e = nf(2, 2, "[x1,x2]");
  CHECK(e.rank() == 2);
  CHECK(e.cls() == 2);
  CHECK_THROWS_AS(e.exponents(), InvalidArgument);
  CHECK_THROWS_AS(nf(2, 1, "x1").matrix(), InvalidArgument);
  CHECK(nf(2, 1, "x1 x2^-2").text() == "b1*b2^-2");
  CHECK(nf(2, 1, "").text() == "1");
  CHECK(nf(2, 2, "x1 x2").key() == nf(2, 2, "x1 x2 x1 X1").key());
  CHECK_THROWS_AS(nf(2, 2, "x1") * nf(2, 3, "x1"), AmbientMismatch);
  CHECK_THROWS_AS(SolvableElement::from_exponents(2, {1}), InvalidArgument);
  CHECK_THROWS_AS(SolvableElement::generator({2, 2}, 3), InvalidArgument);
}

TEST_CASE("exponent overflow is detected") {
  const auto big = SolvableElement::from_exponents(1, {INT64_MAX});
  CHECK_THROWS_AS(big * big, Error);
}
