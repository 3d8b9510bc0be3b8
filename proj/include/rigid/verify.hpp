#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rigid/serialize.hpp"
#include "rigid/word.hpp"

namespace rigid {

struct Failure {
  std::uint64_t seed = 0;  // per-sample seed that reproduces the case
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckReport {
  std::string name;
  std::string statement;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<Failure> failures;
  std::size_t skipped = 0;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

Json to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);

/// {checks: [...], passed}.
Json to_json(const std::vector<CheckReport>& reports);

/// Uniform letters from x1..xm and their inverses; length uniform in [1, max_length].
Word random_word(std::mt19937_64& rng, int m, int max_length = 10);

/// Seed of sample `index` of a run started with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

/// eval_word(uv) = eval_word(u) eval_word(v) and eval_word(w w^-1) = 1 in
/// S(2,2) and S(2,3).
CheckReport check_product_rule(std::uint64_t seed, std::size_t samples, int max_length = 10);

/// sigma(eval_word(w)) = image(w) - 1 in S(2,2) and S(2,3).
CheckReport check_sigma(std::uint64_t seed, std::size_t samples, int max_length = 10);

/// c^u != 1 for nontrivial c in G_n of S(2,n) and nonzero u in Z[G/G_n].
CheckReport check_no_torsion(std::uint64_t seed, std::size_t samples,
                             std::vector<int> classes = {2, 3}, int max_length = 10);

/// Projection and iterated-commutator membership agree in S(2,3) for i = 1, 2, 3.
CheckReport check_series_criteria(std::uint64_t seed, std::size_t samples,
                                  int max_length = 10);

/// r(S(2,2)) = (2,1) > (1,1) = r(Z wr Z) along the epimorphism x1 -> a, x2 -> t,
/// which has the nontrivial kernel element [x1, x1^x2].
CheckReport check_lex_drop();

/// r_1 <= #gens and r_2 <= #gens - 1 for random non-abelian subgroups of
/// S(2,2) and S(3,2). Abelian or trivial-image samples are skipped.
CheckReport check_rank_bounds(std::uint64_t seed, std::size_t samples, int max_length = 10);

/// Rows of elements of A = <x1,x2> in S(3,2): rank over Z[A/A'] is at most the
/// rank over Z[S(3,1)].
CheckReport check_independence_lifting(std::uint64_t seed, std::size_t samples,
                                       int max_length = 10);

/// G_i phi = A cap G_i for the identity retraction of S(2,n) and for the
/// retraction onto <x1> killing x2.
CheckReport check_retraction(std::uint64_t seed, std::size_t samples, int max_length = 10);

struct CheckInfo {
  std::string name;
  std::size_t default_samples;
  std::function<CheckReport(std::uint64_t seed, std::size_t samples)> run;
};

const std::vector<CheckInfo>& all_checks();

/// Runs the named checks (all when `only` is empty). `samples` overrides the
/// per-check defaults. Unknown names raise InvalidArgument.
std::vector<CheckReport> run_checks(std::uint64_t seed, std::optional<std::size_t> samples,
                                    const std::vector<std::string>& only = {});

}  // namespace rigid
