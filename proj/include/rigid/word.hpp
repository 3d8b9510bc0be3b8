#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rigid {

/// A word in a free group F_m. Letters are nonzero integers: +i is the
/// generator x_i, -i its inverse. Words are not reduced unless asked.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  static Word generator(int index);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Largest generator index that occurs (0 for the empty word).
  int max_generator() const;

  Word inverse() const;
  Word reduced() const;
  Word power(int exponent) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;

  /// Text in the word grammar: `x1 X2 ...`, or `1` for the empty word.
  std::string text() const;

 private:
  std::vector<int> letters_;
};

/// [a, b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

/// a^b = b^-1 a b.
Word conjugate(const Word& a, const Word& b);

/// One letter of a parsed expression: a generator `x3` or a variable `$3`.
struct Symbol {
  enum class Kind { Generator, Variable };
  Kind kind = Kind::Generator;
  int index = 1;
  bool inverse = false;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Parses the word grammar
///
///   expr   := term*
///   term   := factor ('^' (['-'] digits | factor))*
///   factor := 'x'N | 'X'N | '$'N | '1' | '(' expr ')' | '[' expr (',' expr)+ ']'
///
/// `u^k` is a power, `u^v` the conjugate v^-1 u v, and `[a,b,c]` the
/// left-normed commutator [[a,b],c]. `$N` is accepted only when
/// `allow_variables` is set. `line` is used for error positions.
std::vector<Symbol> parse_symbols(std::string_view text, bool allow_variables,
                                  int line = 1);

/// Parses a variable-free expression into a word.
Word parse_word(std::string_view text, int line = 1);

}  // namespace rigid
