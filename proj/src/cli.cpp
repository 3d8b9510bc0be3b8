#include "rigid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rigid/equations.hpp"
#include "rigid/error.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/linalg.hpp"
#include "rigid/magnus.hpp"
#include "rigid/serialize.hpp"
#include "rigid/verify.hpp"
#include "rigid/wreath.hpp"

namespace rigid::cli {

namespace {

struct Options {
  int m = 2;
  int n = 2;
  int i = 1;
  int k = 1;
  int radius = 2;
  bool json = false;
  std::string family;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::vector<std::string> only;
  std::uint64_t max_ball_words = SearchLimits{}.max_ball_words;
  std::uint64_t max_assignments = SearchLimits{}.max_assignments;
  std::string word;
  std::string second;
  std::vector<std::string> generators;
  std::string input;
};

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(arg);
  if (!f) throw InvalidArgument("cannot open " + arg);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SolvableElement word_arg(const Options& o, std::size_t index) {
  return normalize(o.m, o.n, parse_word(index == 0 ? o.word : o.second));
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
}

void emit_element(std::ostream& out, const Options& o, const SolvableElement& e) {
  emit(out, o, to_json(e), e.text());
}

std::string coords_text(const SplitMatrix<SolvableElement>& p) {
  std::string text = "top: " + p.top.text();
  for (std::size_t c = 0; c < p.coords.size(); ++c) {
    text += "\nd" + std::to_string(c + 1) + ": " + p.coords[c].text();
  }
  return text;
}

SplitMatrix<SolvableElement> magnus_image(const Options& o) {
  if (o.n < 2) throw InvalidArgument("Magnus coordinates need class >= 2");
  const auto images = generators({o.m, o.n - 1});
  return eval_word(parse_word(o.word), std::span<const SolvableElement>(images));
}

int integer_rank(std::ostream& out, const Options& o, const Json& j) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) {
    std::vector<BigInt> row;
    for (const auto& x : r) row.push_back(bigint_from_json(x));
    rows.push_back(std::move(row));
  }
  const auto s = smith_rank(IntMatrix::from_rows(rows));
  Json factors = Json::array();
  std::string text = "rank " + std::to_string(s.rank) + "\ninvariant factors:";
  for (const auto& d : s.invariant_factors) {
    factors.push_back(bigint_json(d));
    text += " " + d.get_str();
  }
  emit(out, o, {{"rank", s.rank}, {"invariant_factors", factors}}, text);
  return 0;
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
  if (command == "normalize") {
    emit_element(out, o, word_arg(o, 0));
  } else if (command == "mul") {
    emit_element(out, o, word_arg(o, 0) * word_arg(o, 1));
  } else if (command == "comm") {
    emit_element(out, o, commutator(word_arg(o, 0), word_arg(o, 1)));
  } else if (command == "project") {
    emit_element(out, o, project(word_arg(o, 0), o.k));
  } else if (command == "member") {
    const auto e = word_arg(o, 0);
    const bool by_projection = series_member_projection(e, o.i);
    Json j{{"i", o.i}, {"member", by_projection}};
    if (o.m >= 2 || o.n <= 1) {
      const auto ws = series_witnesses(o.m, o.n);
      const auto first = std::min<std::size_t>(static_cast<std::size_t>(o.i - 1), ws.size());
      const bool by_commutator = series_member_commutator(
          e, o.i, std::span<const SolvableElement>(ws).subspan(first));
      if (by_commutator != by_projection) throw Error("membership criteria disagree");
      j["commutator_criterion"] = by_commutator;
    }
    emit(out, o, j, by_projection ? "true" : "false");
  } else if (command == "fox") {
    const auto p = magnus_image(o);
    emit(out, o, to_json(p), coords_text(p));
  } else if (command == "sigma") {
    const auto images = generators({o.m, o.n - 1});
    const auto s = sigma(magnus_image(o), std::span<const SolvableElement>(images));
    emit(out, o, to_json(s), s.text());
  } else if (command == "wreath-embed") {
    const auto w = embed_free_solvable(word_arg(o, 0));
    emit(out, o, to_json(w), w.text());
  } else if (command == "pdim") {
    PrincipalDimension d;
    if (!o.family.empty()) {
      if (o.family == "free") {
        d = closed_form_dimension(GroupFamily::FreeSolvable, o.m, o.n);
      } else if (o.family == "wreath") {
        d = closed_form_dimension(GroupFamily::Wreath, o.m, o.n);
      } else {
        throw InvalidArgument("family must be free or wreath");
      }
    } else {
      std::vector<Word> gens;
      for (const auto& w : o.generators) gens.push_back(parse_word(w));
      d = principal_dimension_metabelian(gens, o.m);
    }
    emit(out, o, to_json(d), d.text());
  } else if (command == "rank") {
    const auto j = Json::parse(read_input(o.input));
    if (j.is_array()) return integer_rank(out, o, j);
    const auto r = laurent_rank(laurent_matrix_from_json(j));
    emit(out, o, {{"rank", r}}, "rank " + std::to_string(r));
  } else if (command == "solve") {
    const auto system = parse_system(read_input(o.input));
    const auto sols =
        solve_ball(system, o.m, o.n, o.radius, {o.max_ball_words, o.max_assignments});
    std::string text = std::to_string(sols.size()) + " solution(s)";
    if (sols.assignments.empty()) text = "no solutions in ball";
    for (const auto& a : sols.assignments) {
      text += "\n";
      for (std::size_t v = 0; v < a.size(); ++v) {
        text += (v ? ", $" : "$") + std::to_string(v + 1) + " = " + a[v].text();
      }
    }
    emit(out, o, to_json(sols), text);
  } else if (command == "verify") {
    const auto reports = run_checks(o.seed, o.samples, o.only);
    const auto j = to_json(reports);
    out << j.dump(2) << '\n';
    return j.at("passed").get<bool>() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in free solvable groups and iterated wreath products", "rigid"};
  app.require_subcommand(1);
  Options o;

  auto group_flags = [&](CLI::App* sub) {
    sub->add_option("-m", o.m, "rank")->check(CLI::PositiveNumber);
    sub->add_option("-n", o.n, "solvability class")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", o.json, "emit JSON");
  };
  auto word_command = [&](const std::string& name, const std::string& help, std::size_t count) {
    auto* sub = app.add_subcommand(name, help);
    group_flags(sub);
    sub->add_option("word", o.word, "a word in the word grammar")->required();
    if (count > 1) sub->add_option("second", o.second, "a second word")->required();
    return sub;
  };

  word_command("normalize", "canonical form of a word", 1);
  word_command("mul", "product of two words", 2);
  word_command("comm", "commutator [u,v] = u^-1 v^-1 u v", 2);
  word_command("project", "image in S(m,k)", 1)
      ->add_option("-k", o.k, "target class")
      ->required();
  word_command("member", "membership in the principal-series term G_i", 1)
      ->add_option("-i", o.i, "series index")
      ->required();
  word_command("fox", "Magnus coordinates (Fox derivatives) of a word", 1);
  word_command("sigma", "sum of (b_i - 1) d_i(w)", 1);
  word_command("wreath-embed", "image in the iterated wreath product", 1);

  auto* pdim = app.add_subcommand("pdim", "principal dimension");
  group_flags(pdim);
  pdim->allow_extras();  // generators are taken verbatim
  pdim->add_option("--family", o.family, "closed form for free or wreath");

  auto* rank = app.add_subcommand("rank", "rank of a JSON integer or Laurent matrix");
  rank->add_flag("--json", o.json, "emit JSON");
  rank->add_option("input", o.input, "file with the matrix, or - for stdin")->required();

  auto* solve = app.add_subcommand("solve", "solutions of a system within a ball");
  group_flags(solve);
  solve->add_option("input", o.input, "system file, one equation per line, or -")->required();
  solve->add_option("-r,--radius", o.radius, "ball radius")->check(CLI::NonNegativeNumber);
  solve->add_option("--max-ball-words", o.max_ball_words, "cap on words visited per ball");
  solve->add_option("--max-assignments", o.max_assignments, "cap on evaluated assignments");

  auto* verify = app.add_subcommand("verify", "randomized consistency checks");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--samples", o.samples, "samples per check");
  verify->add_option("--only", o.only, "run only the named checks");

  if (!args.empty() && !args[0].starts_with('-') && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown subcommand: " << args[0] << '\n';
    return exit_usage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  const auto* chosen = app.get_subcommands().front();
  o.generators = chosen->remaining();
  try {
    return dispatch(chosen->get_name(), o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Json::parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_cap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rigid::cli
