#include "rigid/word.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>

#include "rigid/error.hpp"

namespace rigid {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l == 0) throw InvalidArgument("word letter 0");
  }
}

Word Word::generator(int index) {
  if (index < 1) throw InvalidArgument("generator index must be positive");
  return Word({index});
}

int Word::max_generator() const {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::reduced() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (int l : letters_) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::power(int exponent) const {
  const Word base = exponent < 0 ? inverse() : *this;
  Word w;
  for (int k = 0; k < std::abs(exponent); ++k) {
    w.letters_.insert(w.letters_.end(), base.letters_.begin(),
                      base.letters_.end());
  }
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
  return w;
}

std::string Word::text() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += ' ';
    out += letters_[i] > 0 ? 'x' : 'X';
    out += std::to_string(std::abs(letters_[i]));
  }
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

Word conjugate(const Word& a, const Word& b) { return b.inverse() * a * b; }

namespace {

using Symbols = std::vector<Symbol>;

Symbols invert(const Symbols& s) {
  Symbols out(s.rbegin(), s.rend());
  for (auto& sym : out) sym.inverse = !sym.inverse;
  return out;
}

Symbols concat(Symbols a, const Symbols& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Symbols symbol_commutator(const Symbols& a, const Symbols& b) {
  return concat(concat(concat(invert(a), invert(b)), a), b);
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_variables, int line)
      : text_(text), allow_variables_(allow_variables), line_(line) {}

  Symbols parse() {
    Symbols out = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool at_factor_start() {
    skip_space();
    char c = peek();
    return c == 'x' || c == 'X' || c == '$' || c == '(' || c == '[' ||
           c == '1';
  }

  int number() {
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > INT_MAX) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }

  Symbols expr() {
    Symbols out;
    while (at_factor_start()) out = concat(std::move(out), term());
    return out;
  }

  Symbols term() {
    Symbols base = factor();
    for (;;) {
      skip_space();
      if (peek() != '^') break;
      ++pos_;
      skip_space();
      char c = peek();
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        bool negative = c == '-';
        if (negative) {
          ++pos_;
          skip_space();
        }
        int exponent = number();
        if (exponent > 1'000'000) fail("exponent too large");
        Symbols unit = negative ? invert(base) : base;
        Symbols powered;
        for (int k = 0; k < exponent; ++k) powered = concat(std::move(powered), unit);
        base = std::move(powered);
      } else if (at_factor_start()) {
        Symbols by = factor();
        base = concat(concat(invert(by), base), by);
      } else {
        fail("expected exponent or conjugating factor after '^'");
      }
    }
    return base;
  }

  Symbols factor() {
    skip_space();
    char c = peek();
    if (c == 'x' || c == 'X' || c == '$') {
      if (c == '$' && !allow_variables_) fail("variables are not allowed here");
      ++pos_;
      int index = number();
      if (index < 1) fail("index must be positive");
      Symbol s;
      s.kind = c == '$' ? Symbol::Kind::Variable : Symbol::Kind::Generator;
      s.index = index;
      s.inverse = c == 'X';
      return {s};
    }
    if (c == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected number");
      return {};
    }
    if (c == '(') {
      ++pos_;
      Symbols inner = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Symbols acc = expr();
      int parts = 1;
      for (;;) {
        skip_space();
        if (peek() == ',') {
          ++pos_;
          acc = symbol_commutator(acc, expr());
          ++parts;
        } else if (peek() == ']') {
          ++pos_;
          break;
        } else {
          fail("expected ',' or ']'");
        }
      }
      if (parts < 2) fail("commutator needs at least two entries");
      return acc;
    }
    fail(c == '\0' ? "unexpected end of input"
                   : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  bool allow_variables_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Symbol> parse_symbols(std::string_view text, bool allow_variables,
                                  int line) {
  return Parser(text, allow_variables, line).parse();
}

Word parse_word(std::string_view text, int line) {
  std::vector<int> letters;
  for (const auto& s : parse_symbols(text, false, line)) {
    letters.push_back(s.inverse ? -s.index : s.index);
  }
  return Word(std::move(letters));
}

}  // namespace rigid
