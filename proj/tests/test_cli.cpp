#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rigid/cli.hpp"
#include "rigid/free_solvable.hpp"
#include "rigid/serialize.hpp"

using namespace rigid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("rigid_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("normalize") {
  const auto r = run({"normalize", "-m", "2", "-n", "2", "[x1,x2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "M(1 | -1*1 + 1*b2 | 1*1 + -1*b1)\n");

  const auto j = run({"normalize", "-m", "2", "-n", "2", "--json", "x1 x2 X1 X2"});
  CHECK(j.code == 0);
  const auto e = solvable_from_json(Json::parse(j.out));
  CHECK(e == normalize(2, 2, parse_word("x1 x2 X1 X2")));
  CHECK_FALSE(e.is_identity());

  const auto empty = run({"normalize", "-m", "2", "-n", "2", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == SolvableElement::identity({2, 2}).text() + "\n");
}

TEST_CASE("member") {
  CHECK(run({"member", "-m", "2", "-n", "2", "-i", "2", "x1 x2 X1 X2"}).out == "true\n");
  CHECK(run({"member", "-m", "2", "-n", "2", "-i", "2", "x1"}).out == "false\n");
  const auto j = Json::parse(run({"member", "-m", "2", "-n", "3", "-i", "3", "--json",
                                  "[[x1,x2],[x1,x2]^x1]"}).out);
  CHECK(j["member"] == true);
  CHECK(j["commutator_criterion"] == true);
  CHECK(run({"member", "-m", "2", "-n", "2", "x1"}).code == cli::exit_usage);
}

TEST_CASE("other word commands") {
  CHECK(run({"mul", "-m", "2", "-n", "1", "x1", "x2"}).code == 0);
  const auto comm = run({"comm", "-m", "2", "-n", "2", "x1", "x2"});
  CHECK(comm.out == run({"normalize", "-m", "2", "-n", "2", "[x1,x2]"}).out);
  CHECK(run({"project", "-m", "2", "-n", "2", "-k", "1", "[x1,x2]"}).out ==
        normalize(2, 1, Word()).text() + "\n");
  const auto fox = run({"fox", "-m", "2", "-n", "2", "[x1,x2]"});
  CHECK(fox.code == 0);
  CHECK(fox.out.find("d1: -1*1 + 1*b2") != std::string::npos);
  CHECK(run({"sigma", "-m", "2", "-n", "2", "[x1,x2]"}).out == "0\n");
  CHECK(run({"wreath-embed", "-m", "2", "-n", "2", "x1"}).code == 0);
  CHECK(run({"fox", "-m", "2", "-n", "1", "x1"}).code == 1);
}

TEST_CASE("pdim") {
  CHECK(run({"pdim", "-m", "2", "x1", "x2"}).out == "(2,1)\n");
  CHECK(run({"pdim", "-m", "2", "x1", "[x1,x2]"}).out == "(1,1)\n");
  CHECK(run({"pdim", "--family", "wreath", "-m", "1", "-n", "1"}).out == "(1,1)\n");
  CHECK(run({"pdim", "--family", "free", "-m", "3", "-n", "3"}).out == "(3,2,2)\n");
  CHECK(run({"pdim", "--json", "-m", "2", "x1", "x2"}).out == "[\n  2,\n  1\n]\n");
  CHECK(run({"pdim", "-m", "2", "[x1,x2]"}).code == 1);
}

TEST_CASE("rank") {
  const auto ints = temp_file("ints.json", "[[2,0],[0,3]]");
  CHECK(run({"rank", ints}).out == "rank 2\ninvariant factors: 1 6\n");
  const auto laurent = temp_file(
      "laurent.json",
      R"({"variables":1,"rows":[[[{"exps":[1],"num":1,"den":1},{"exps":[0],"num":-1,"den":1}]],)"
      R"([[{"exps":[0],"num":1,"den":1},{"exps":[1],"num":-1,"den":1}]]]})");
  CHECK(run({"rank", laurent}).out == "rank 1\n");
  const auto bad = temp_file("bad.json", "[[1,");
  CHECK(run({"rank", bad}).code == cli::exit_usage);
  CHECK(run({"rank", "/nonexistent/file"}).code == 1);
}

TEST_CASE("solve") {
  const auto sys = temp_file("sys.txt", "# x commutes with [x1,x2]\n[$1, [x1,x2]]\n");
  const auto r = run({"solve", "-m", "2", "-n", "2", "-r", "2", "--json", sys});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["params"]["radius"] == 2);
  CHECK(j["count"] == j["assignments"].size());
  CHECK(run({"solve", "-m", "2", "-n", "2", "-r", "2", "--json", sys}).out == r.out);

  const auto text = run({"solve", "-m", "2", "-n", "2", "-r", "1", sys});
  CHECK(text.out.starts_with("1 solution(s)\n$1 = "));

  const auto none = temp_file("none.txt", "$1 x1\n$1 x2\n");
  CHECK(run({"solve", "-m", "2", "-n", "2", "-r", "2", none}).out == "no solutions in ball\n");

  const auto cap = run({"solve", "-m", "2", "-n", "2", "-r", "3", "--max-assignments", "5", sys});
  CHECK(cap.code == cli::exit_cap);
  CHECK(cap.err.find("search space too large") != std::string::npos);

  const auto parse = temp_file("parse.txt", "$1\n$1 (x2\n");
  const auto p = run({"solve", parse});
  CHECK(p.code == cli::exit_usage);
  CHECK(p.err.find("2:") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--seed", "3", "--samples", "2", "--only", "sigma_identity"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["seed"] == 3);
  CHECK(run({"verify", "--only", "missing"}).code == 1);
}

TEST_CASE("usage errors") {
  const auto r = run({"frobnicate"});
  CHECK(r.code == cli::exit_usage);
  CHECK(r.err == "error: unknown subcommand: frobnicate\n");
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"normalize", "-m", "2", "--bogus", "x1"}).code == cli::exit_usage);
  const auto p = run({"normalize", "-m", "2", "x1 (x2"});
  CHECK(p.code == cli::exit_usage);
  CHECK(p.err.find("1:7") != std::string::npos);
  CHECK(run({"normalize", "-m", "2", "x3"}).code == 1);
}
