#include "rigid/equations.hpp"

#include <algorithm>
#include <utility>

#include "rigid/error.hpp"

namespace rigid {

namespace {

void push_letter(std::vector<MixedWord::Letter>& out, MixedWord::Letter letter) {
  if (auto* w = std::get_if<Word>(&letter)) {
    if (w->empty()) return;
    if (!out.empty()) {
      if (auto* last = std::get_if<Word>(&out.back())) {
        *last = *last * *w;
        return;
      }
    }
  }
  out.push_back(std::move(letter));
}

}  // namespace

MixedWord::MixedWord(std::vector<Letter> letters, int variables) : variables_(variables) {
  for (auto& l : letters) push_letter(letters_, std::move(l));
  for (const auto& l : letters_) {
    if (const auto* v = std::get_if<Var>(&l); v && v->index < 1) {
      throw InvalidArgument("variable index must be positive");
    }
  }
  if (max_variable() > variables_) throw InvalidArgument("variable index exceeds arity");
}

MixedWord MixedWord::parse(std::string_view text, int line) {
  std::vector<Letter> letters;
  int top = 0;
  for (const auto& s : parse_symbols(text, true, line)) {
    if (s.kind == Symbol::Kind::Variable) {
      letters.emplace_back(Var{s.index, s.inverse});
      top = std::max(top, s.index);
    } else {
      letters.emplace_back(Word({s.inverse ? -s.index : s.index}));
    }
  }
  return MixedWord(std::move(letters), top);
}

MixedWord MixedWord::constant(const Word& w, int variables) {
  return MixedWord({w}, variables);
}

int MixedWord::max_variable() const {
  int top = 0;
  for (const auto& l : letters_) {
    if (const auto* v = std::get_if<Var>(&l)) top = std::max(top, v->index);
  }
  return top;
}

MixedWord MixedWord::with_arity(int variables) const {
  return MixedWord(letters_, variables);
}

std::string MixedWord::text() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    if (const auto* v = std::get_if<Var>(&l)) {
      out += '$' + std::to_string(v->index);
      if (v->inverse) out += "^-1";
    } else {
      out += std::get<Word>(l).text();
    }
  }
  return out.empty() ? "1" : out;
}

MixedWord operator*(const MixedWord& a, const MixedWord& b) {
  auto letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return MixedWord(std::move(letters), std::max(a.variables_, b.variables_));
}

MixedWord substitute(const MixedWord& s, int index, const Word& w) {
  std::vector<MixedWord::Letter> letters;
  for (const auto& l : s.letters()) {
    const auto* v = std::get_if<Var>(&l);
    if (v && v->index == index) {
      letters.emplace_back(v->inverse ? w.inverse() : w);
    } else {
      letters.push_back(l);
    }
  }
  return MixedWord(std::move(letters), s.variables());
}

System make_system(std::vector<MixedWord> equations, int variables) {
  int top = 0;
  for (const auto& e : equations) top = std::max(top, e.max_variable());
  if (variables < 0) variables = top;
  System s;
  s.variables = variables;
  for (auto& e : equations) s.equations.push_back(e.with_arity(variables));
  return s;
}

System parse_system(std::string_view text) {
  std::vector<MixedWord> equations;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    auto row = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    const auto first = row.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || row[first] == '#') continue;
    equations.push_back(MixedWord::parse(row, line));
  }
  return make_system(std::move(equations));
}

SolvableElement evaluate(const MixedWord& s, std::span<const SolvableElement> assignment,
                         const SolvableAmbient& ambient) {
  if (assignment.size() != static_cast<std::size_t>(s.variables())) {
    throw InvalidArgument("arity mismatch");
  }
  for (const auto& g : assignment) {
    if (!(g.ambient() == ambient)) throw AmbientMismatch();
  }
  auto acc = SolvableElement::identity(ambient);
  for (const auto& l : s.letters()) {
    if (const auto* v = std::get_if<Var>(&l)) {
      const auto& g = assignment[v->index - 1];
      acc = acc * (v->inverse ? g.inverse() : g);
    } else {
      acc = acc * normalize(ambient.rank, ambient.cls, std::get<Word>(l));
    }
  }
  return acc;
}

namespace {

// Evaluation with the constants normalized once.
class Evaluator {
 public:
  Evaluator(const MixedWord& s, const SolvableAmbient& ambient) : ambient_(ambient) {
    for (const auto& l : s.letters()) {
      if (const auto* v = std::get_if<Var>(&l)) {
        steps_.push_back({v->index - 1, v->inverse, SolvableElement::identity(ambient)});
      } else {
        steps_.push_back(
            {-1, false, normalize(ambient.rank, ambient.cls, std::get<Word>(l))});
      }
    }
  }

  bool vanishes(const std::vector<SolvableElement>& values,
                const std::vector<SolvableElement>& inverses) const {
    auto acc = SolvableElement::identity(ambient_);
    for (const auto& st : steps_) {
      if (st.slot < 0) {
        acc = acc * st.constant;
      } else {
        acc = acc * (st.inverse ? inverses[st.slot] : values[st.slot]);
      }
    }
    return is_trivial(acc);
  }

 private:
  struct Step {
    int slot;
    bool inverse;
    SolvableElement constant;
  };
  SolvableAmbient ambient_;
  std::vector<Step> steps_;
};

}  // namespace

SolutionSet solve_ball(const System& system, int m, int n, int radius,
                       const SearchLimits& limits) {
  if (radius < 0) throw InvalidArgument("radius must be non-negative");
  for (const auto& e : system.equations) {
    if (e.variables() != system.variables) throw InvalidArgument("arity mismatch");
  }
  const SolvableAmbient ambient{m, n};
  const auto ball = ball_enumerate(m, n, radius, limits.max_ball_words);
  const auto v = static_cast<std::size_t>(system.variables);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < v; ++i) {
    if (total > limits.max_assignments / ball.size()) {
      throw CapExceeded("search space too large");
    }
    total *= ball.size();
  }
  if (total > limits.max_assignments) throw CapExceeded("search space too large");

  std::vector<SolvableElement> inverses;
  for (const auto& g : ball) inverses.push_back(g.inverse());
  std::vector<Evaluator> evaluators;
  for (const auto& e : system.equations) evaluators.emplace_back(e, ambient);

  SolutionSet out{m, n, radius, system.variables, {}};
  std::vector<std::size_t> index(v, 0);
  std::vector<SolvableElement> values(v, ball.front()), inv(v, inverses.front());
  // Odometer over ball^v; the last slot moves fastest, so tuples come out in
  // lexicographic key order.
  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t i = 0; i < v; ++i) {
      values[i] = ball[index[i]];
      inv[i] = inverses[index[i]];
    }
    bool ok = true;
    for (const auto& ev : evaluators) {
      if (!ev.vanishes(values, inv)) {
        ok = false;
        break;
      }
    }
    if (ok) out.assignments.push_back(values);
    for (std::size_t i = v; i-- > 0;) {
      if (++index[i] < ball.size()) break;
      index[i] = 0;
    }
  }
  return out;
}

bool vanishes_on(const MixedWord& f, const SolutionSet& sols) {
  if (f.variables() != sols.variables) throw InvalidArgument("arity mismatch");
  const SolvableAmbient ambient{sols.m, sols.n};
  const Evaluator ev(f, ambient);
  for (const auto& a : sols.assignments) {
    std::vector<SolvableElement> inv;
    for (const auto& g : a) inv.push_back(g.inverse());
    if (!ev.vanishes(a, inv)) return false;
  }
  return true;
}

bool equivalent_on_ball(const System& s, const System& t, int m, int n, int radius,
                        const SearchLimits& limits) {
  if (s.variables != t.variables) throw InvalidArgument("arity mismatch");
  return solve_ball(s, m, n, radius, limits) == solve_ball(t, m, n, radius, limits);
}

}  // namespace rigid
