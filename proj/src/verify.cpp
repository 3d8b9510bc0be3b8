#include "rigid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "rigid/error.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/linalg.hpp"
#include "rigid/magnus.hpp"
#include "rigid/wreath.hpp"

namespace rigid {

Json to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"seed", f.seed}, {"detail", f.detail}});
  return {{"name", r.name},         {"statement", r.statement},
          {"seed", r.seed},         {"samples", r.samples},
          {"failures", failures},   {"skipped", r.skipped},
          {"elapsed_ms", r.elapsed_ms}, {"passed", r.passed()}};
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.statement = j.at("statement").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("seed").get<std::uint64_t>(), f.at("detail").get<std::string>()});
  }
  r.skipped = j.at("skipped").get<std::size_t>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json checks = Json::array();
  bool passed = true;
  for (const auto& r : reports) {
    checks.push_back(to_json(r));
    passed = passed && r.passed();
  }
  return {{"checks", checks}, {"passed", passed}};
}

Word random_word(std::mt19937_64& rng, int m, int max_length) {
  if (m < 1 || max_length < 1) throw InvalidArgument("random_word needs m, length >= 1");
  std::uniform_int_distribution<int> length(1, max_length);
  std::uniform_int_distribution<int> letter(0, 2 * m - 1);
  std::vector<int> letters(static_cast<std::size_t>(length(rng)));
  for (auto& l : letters) {
    const int k = letter(rng);
    l = k < m ? k + 1 : -(k - m + 1);
  }
  return Word(std::move(letters));
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs `body` once per sample with its own generator. `body` returns an empty
// string on success, "skip" to skip, or a failure description.
template <class Body>
CheckReport run_sampled(std::string name, std::string statement, std::uint64_t seed,
                        std::size_t samples, Body body) {
  Timer timer;
  CheckReport r{std::move(name), std::move(statement), seed, samples, {}, 0, 0};
  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = sample_seed(seed, i);
    std::mt19937_64 rng(s);
    std::string outcome;
    try {
      outcome = body(rng, i);
    } catch (const Error& e) {
      outcome = std::string("exception: ") + e.what();
    }
    if (outcome == "skip") {
      ++r.skipped;
    } else if (!outcome.empty()) {
      r.failures.push_back({s, outcome});
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

std::vector<SolvableElement> images_for(int m, int n) { return generators({m, n - 1}); }

int sample_class(std::size_t i) { return i % 2 == 0 ? 2 : 3; }

// A nontrivial element of G_n of S(2,n), n in {2,3}.
SolvableElement random_series_element(std::mt19937_64& rng, int n, int max_length,
                                      std::string& words) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Word w;
    if (n == 2) {
      w = commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length));
    } else {
      w = commutator(
          commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length)),
          commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length)));
    }
    auto c = normalize(2, n, w);
    if (!is_trivial(c)) {
      words = w.text();
      return c;
    }
  }
  throw Error("no nontrivial series element found");
}

}  // namespace

CheckReport check_product_rule(std::uint64_t seed, std::size_t samples, int max_length) {
  return run_sampled(
      "product_rule", "Magnus images multiply: d(uv) = d(u) v + d(v)", seed, samples,
      [&](std::mt19937_64& rng, std::size_t) -> std::string {
        for (int n : {2, 3}) {
          const auto images = images_for(2, n);
          const std::span<const SolvableElement> im(images);
          const auto u = random_word(rng, 2, max_length);
          const auto v = random_word(rng, 2, max_length);
          if (!(eval_word(u * v, im) == split_mul(eval_word(u, im), eval_word(v, im)))) {
            return "S(2," + std::to_string(n) + ") u = " + u.text() + ", v = " + v.text();
          }
          if (!eval_word(u * u.inverse(), im).is_identity()) {
            return "S(2," + std::to_string(n) + ") w w^-1 != 1 for w = " + u.text();
          }
        }
        return "";
      });
}

CheckReport check_sigma(std::uint64_t seed, std::size_t samples, int max_length) {
  return run_sampled(
      "sigma_identity", "sum of (b_i - 1) d_i(w) equals image(w) - 1", seed, samples,
      [&](std::mt19937_64& rng, std::size_t) -> std::string {
        for (int n : {2, 3}) {
          const auto images = images_for(2, n);
          const std::span<const SolvableElement> im(images);
          const auto w = random_word(rng, 2, max_length);
          const auto bar = normalize(2, n - 1, w);
          const auto expected = SolvableRing::monomial(bar) -
                                SolvableRing::constant(bar.ambient(), BigInt(1));
          if (!(sigma(eval_word(w, im), im) == expected)) {
            return "S(2," + std::to_string(n) + ") w = " + w.text();
          }
        }
        return "";
      });
}

CheckReport check_no_torsion(std::uint64_t seed, std::size_t samples, std::vector<int> classes,
                             int max_length) {
  if (classes.empty()) throw InvalidArgument("no classes given");
  for (int n : classes) {
    if (n < 2) throw InvalidArgument("no_torsion needs class >= 2");
  }
  return run_sampled(
      "no_torsion", "principal-series factors have no module torsion", seed, samples,
      [&](std::mt19937_64& rng, std::size_t i) -> std::string {
        const int n = classes[i % classes.size()];
        std::string c_words;
        const auto c = random_series_element(rng, n, max_length, c_words);
        std::uniform_int_distribution<int> term_count(1, 3);
        std::uniform_int_distribution<int> mult(1, 3);
        std::uniform_int_distribution<int> sign(0, 1);
        for (int attempt = 0; attempt < 100; ++attempt) {
          std::vector<ActionTerm> u;
          SolvableRing image(SolvableAmbient{2, n - 1});
          std::string u_text;
          const int k = term_count(rng);
          for (int t = 0; t < k; ++t) {
            const auto h = random_word(rng, 2, max_length);
            const std::int64_t mu = mult(rng) * (sign(rng) ? 1 : -1);
            u.push_back({normalize(2, n, h), mu});
            image.add_term(normalize(2, n - 1, h), BigInt(static_cast<long>(mu)));
            u_text += (u_text.empty() ? "" : " + ") + std::to_string(mu) + "*(" + h.text() + ")";
          }
          if (image.is_zero()) continue;
          if (is_trivial(act(c, u))) {
            return "S(2," + std::to_string(n) + ") c = " + c_words + ", u = " + u_text;
          }
          return "";
        }
        return "skip";
      });
}

CheckReport check_series_criteria(std::uint64_t seed, std::size_t samples, int max_length) {
  const auto witnesses = series_witnesses(2, 3);
  const std::span<const SolvableElement> ws(witnesses);
  return run_sampled(
      "series_criteria", "projection and iterated-commutator membership agree", seed, samples,
      [&](std::mt19937_64& rng, std::size_t idx) -> std::string {
        Word w;
        switch (idx % 3) {
          case 0:
            w = random_word(rng, 2, max_length);
            break;
          case 1:
            w = commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length));
            break;
          default:
            w = commutator(
                commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length)),
                commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length)));
        }
        const auto e = normalize(2, 3, w);
        for (int i = 1; i <= 3; ++i) {
          const bool by_projection = series_member_projection(e, i);
          const bool by_commutator = series_member_commutator(e, i, ws.subspan(i - 1));
          if (by_projection != by_commutator) {
            return "i = " + std::to_string(i) + ", w = " + w.text();
          }
        }
        return "";
      });
}

CheckReport check_lex_drop() {
  Timer timer;
  CheckReport r{"lex_drop",
                "principal dimension drops lexicographically under a proper epimorphism",
                0,
                1,
                {},
                0,
                0};
  auto fail = [&](std::string detail) { r.failures.push_back({0, std::move(detail)}); };
  try {
    const std::vector<Word> gens{Word::generator(1), Word::generator(2)};
    const auto r_free = principal_dimension_metabelian(gens, 2);
    if (!(r_free == PrincipalDimension{{2, 1}})) fail("r(S(2,2)) = " + r_free.text());
    if (!(closed_form_dimension(GroupFamily::FreeSolvable, 2, 2) == r_free)) {
      fail("closed form disagrees with " + r_free.text());
    }
    const auto r_wreath = closed_form_dimension(GroupFamily::Wreath, 1, 1);
    if (!(r_wreath == PrincipalDimension{{1, 1}})) fail("r(Z wr Z) = " + r_wreath.text());

    // x1 -> a (the base generator), x2 -> t (the top generator).
    const auto origin = WreathElement::identity({1, 0});
    const auto a = WreathElement::delta(origin, 1);
    const auto t = WreathElement::lift(WreathElement::abelian(1, {1}));
    auto phi = [&](const Word& w) {
      auto acc = WreathElement::identity({1, 1});
      for (int l : w.letters()) {
        const auto& g = std::abs(l) == 1 ? a : t;
        acc = acc * (l > 0 ? g : g.inverse());
      }
      return acc;
    };
    const Word x1 = Word::generator(1), x2 = Word::generator(2);
    if (!(phi(x1) == a) || !(phi(x2) == t)) fail("generators not mapped onto a, t");
    const Word kernel = commutator(x1, conjugate(x1, x2));
    const auto k = normalize(2, 2, kernel);
    if (is_trivial(k) || embed_free_solvable(k).is_identity()) {
      fail("kernel witness is trivial in S(2,2)");
    }
    if (!phi(kernel).is_identity()) fail("kernel witness survives in Z wr Z");
    if (lex_compare(r_free, r_wreath) != std::strong_ordering::greater) {
      fail("lex_compare did not report greater");
    }
  } catch (const Error& e) {
    fail(std::string("exception: ") + e.what());
  }
  r.elapsed_ms = timer.ms();
  return r;
}

CheckReport check_rank_bounds(std::uint64_t seed, std::size_t samples, int max_length) {
  return run_sampled(
      "rank_bounds", "r_1 <= #generators and r_2 <= #generators - 1", seed, samples,
      [&](std::mt19937_64& rng, std::size_t i) -> std::string {
        const int m = i % 2 == 0 ? 2 : 3;
        std::uniform_int_distribution<int> count(2, 3);
        const int g = count(rng);
        std::vector<Word> gens;
        std::string text;
        for (int k = 0; k < g; ++k) {
          gens.push_back(random_word(rng, m, max_length));
          text += (text.empty() ? "" : ", ") + gens.back().text();
        }
        PrincipalDimension d;
        try {
          d = principal_dimension_metabelian(gens, m);
        } catch (const InvalidArgument&) {
          return "skip";  // trivial image
        }
        if (d.size() == 1) return "skip";
        if (d.ranks[0] > g || d.ranks[1] > g - 1 || d.ranks[1] < 0) {
          return "S(" + std::to_string(m) + ",2) <" + text + "> has r = " + d.text();
        }
        return "";
      });
}

CheckReport check_independence_lifting(std::uint64_t seed, std::size_t samples,
                                       int max_length) {
  const std::vector<std::vector<std::int64_t>> sub{{1, 0, 0}, {0, 1, 0}};
  const std::vector<std::vector<std::int64_t>> full{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  return run_sampled(
      "independence_lifting", "rank over Z[A/A'] is at most rank over Z[B]", seed, samples,
      [&](std::mt19937_64& rng, std::size_t) -> std::string {
        std::uniform_int_distribution<int> count(1, 3);
        const int k = count(rng);
        std::vector<ModuleRow> rows;
        std::string text;
        for (int j = 0; j < k; ++j) {
          const auto w =
              commutator(random_word(rng, 2, max_length), random_word(rng, 2, max_length));
          const auto e = normalize(3, 2, w);
          rows.push_back(e.matrix().coords);
          text += (text.empty() ? "" : ", ") + w.text();
        }
        const auto over_a = coset_rank(rows, sub);
        const auto over_b = coset_rank(rows, full);
        if (over_a > over_b) {
          return "rows " + text + ": " + std::to_string(over_a) + " > " + std::to_string(over_b);
        }
        return "";
      });
}

CheckReport check_retraction(std::uint64_t seed, std::size_t samples, int max_length) {
  return run_sampled(
      "retraction", "G_i phi = A cap G_i for a retraction phi of G onto A", seed, samples,
      [&](std::mt19937_64& rng, std::size_t idx) -> std::string {
        const int n = sample_class(idx);
        const bool kill_x2 = (idx / 2) % 2 == 1;
        // phi on words: identity, or x2 -> 1 (a retraction onto <x1>).
        auto phi = [&](const Word& w) {
          if (!kill_x2) return w;
          std::vector<int> letters;
          for (int l : w.letters()) {
            if (std::abs(l) != 2) letters.push_back(l);
          }
          return Word(std::move(letters));
        };
        const auto w = random_word(rng, 2, max_length);
        const auto e = normalize(2, n, w);
        const auto image = normalize(2, n, phi(w));
        // A-elements are fixed by phi.
        const auto a_word = kill_x2 ? phi(w) : w;
        const auto a = normalize(2, n, a_word);
        if (!(normalize(2, n, phi(a_word)) == a)) return "phi does not fix A on " + w.text();
        for (int i = 1; i <= n + 1; ++i) {
          // G_i phi is contained in A cap G_i.
          if (series_member_projection(e, i) && !series_member_projection(image, i)) {
            return "G_" + std::to_string(i) + " phi escapes G_" + std::to_string(i) +
                   " at w = " + w.text();
          }
          // A cap G_i is contained in G_i phi, via a = a phi.
          if (kill_x2 && series_member_projection(a, i) != (i == 1 || is_trivial(a))) {
            return "A cap G_" + std::to_string(i) + " wrong at " + a_word.text();
          }
        }
        return "";
      });
}

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> checks{
      {"product_rule", 500,
       [](std::uint64_t s, std::size_t k) { return check_product_rule(s, k); }},
      {"sigma_identity", 500, [](std::uint64_t s, std::size_t k) { return check_sigma(s, k); }},
      {"no_torsion", 200,
       [](std::uint64_t s, std::size_t k) { return check_no_torsion(s, k); }},
      {"series_criteria", 100,
       [](std::uint64_t s, std::size_t k) { return check_series_criteria(s, k); }},
      {"lex_drop", 1, [](std::uint64_t, std::size_t) { return check_lex_drop(); }},
      {"rank_bounds", 50,
       [](std::uint64_t s, std::size_t k) { return check_rank_bounds(s, k); }},
      {"independence_lifting", 50,
       [](std::uint64_t s, std::size_t k) { return check_independence_lifting(s, k); }},
      {"retraction", 100,
       [](std::uint64_t s, std::size_t k) { return check_retraction(s, k); }},
  };
  return checks;
}

std::vector<CheckReport> run_checks(std::uint64_t seed, std::optional<std::size_t> samples,
                                    const std::vector<std::string>& only) {
  std::set<std::string> known;
  for (const auto& c : all_checks()) known.insert(c.name);
  for (const auto& name : only) {
    if (!known.count(name)) throw InvalidArgument("unknown check: " + name);
  }
  std::vector<CheckReport> out;
  for (const auto& c : all_checks()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.name) == only.end()) continue;
    out.push_back(c.run(seed, samples.value_or(c.default_samples)));
  }
  return out;
}

}  // namespace rigid
