#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rigid/free_solvable.hpp"
#include "rigid/word.hpp"

namespace rigid {

/// An occurrence of the variable $index (or its inverse) in a mixed word.
struct Var {
  int index = 1;
  bool inverse = false;

  friend bool operator==(const Var&, const Var&) = default;
};

/// A word in the variables $1..$v with constants from the free group.
/// Adjacent constant letters are merged into one Word.
class MixedWord {
 public:
  using Letter = std::variant<Var, Word>;

  MixedWord() = default;
  /// `variables` must be at least the largest variable index used.
  MixedWord(std::vector<Letter> letters, int variables);

  static MixedWord parse(std::string_view text, int line = 1);
  static MixedWord constant(const Word& w, int variables = 0);

  const std::vector<Letter>& letters() const { return letters_; }
  int variables() const { return variables_; }
  int max_variable() const;

  /// Same letters, declared over `variables` unknowns.
  MixedWord with_arity(int variables) const;

  std::string text() const;

  friend MixedWord operator*(const MixedWord& a, const MixedWord& b);
  friend bool operator==(const MixedWord&, const MixedWord&) = default;

 private:
  std::vector<Letter> letters_;
  int variables_ = 0;
};

/// Replaces every occurrence of $index by the constant w (inverse by w^-1).
MixedWord substitute(const MixedWord& s, int index, const Word& w);

/// A finite system s_1 = 1, ..., s_k = 1 over a common set of unknowns.
struct System {
  std::vector<MixedWord> equations;
  int variables = 0;
};

/// One equation per nonblank line; lines starting with '#' are skipped.
/// The arity is the largest variable index that occurs.
System parse_system(std::string_view text);

/// Builds a system, raising every equation to the common arity.
System make_system(std::vector<MixedWord> equations, int variables = -1);

using Assignment = std::vector<SolvableElement>;

/// s(g_1, ..., g_v) in S(m,n).
SolvableElement evaluate(const MixedWord& s, std::span<const SolvableElement> assignment,
                         const SolvableAmbient& ambient);

struct SearchLimits {
  std::uint64_t max_ball_words = 1'000'000;
  std::uint64_t max_assignments = 10'000'000;
};

/// Solutions of a system among the tuples of a ball, sorted by keys.
struct SolutionSet {
  int m = 0;
  int n = 0;
  int radius = 0;
  int variables = 0;
  std::vector<Assignment> assignments;

  std::size_t size() const { return assignments.size(); }
  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

SolutionSet solve_ball(const System& system, int m, int n, int radius,
                       const SearchLimits& limits = {});

/// True iff f evaluates trivially on every assignment of `sols`.
bool vanishes_on(const MixedWord& f, const SolutionSet& sols);

bool equivalent_on_ball(const System& s, const System& t, int m, int n, int radius,
                        const SearchLimits& limits = {});

}  // namespace rigid
