#include "doctest.h"

#include "json.hpp"
#include "test_support.hpp"
#include "whp/cli.hpp"
#include "whp/endomorphism.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace whp;
using namespace whp::testing;

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

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("golden transcripts") {
  int cases = 0;
  for (const auto& entry : std::filesystem::directory_iterator(WHP_GOLDEN_DIR)) {
    if (entry.path().extension() != ".args") continue;
    auto stem = entry.path();
    stem.replace_extension();
    CAPTURE(stem.filename().string());
    const Result r = run(lines(slurp(entry.path())));
    CHECK(r.code == std::stoi(slurp(stem.string() + ".code")));
    CHECK(r.out == slurp(stem.string() + ".out"));
    ++cases;
  }
  CHECK(cases >= 6);
}

TEST_CASE("decide exit codes") {
  CHECK(run({"decide", "aut", "--m", "1", "--n", "2", "(0; x1)", "(0; x2)"}).code == cli::exit_yes);
  CHECK(run({"decide", "aut", "--m", "1", "--n", "2", "(2; 1)", "(3; 1)"}).code == cli::exit_no);
  CHECK(run({"decide", "mon", "--m", "1", "--n", "2", "(0; x1^2)", "(0; x2^2 x1^2 X2^2)", "--bound", "1"}).code ==
        cli::exit_unknown);
  const Result no = run({"decide", "aut", "--m", "1", "--n", "2", "(2; 1)", "(3; 1)"});
  CHECK(no.out.find("reason: abelian-unsolvable") != std::string::npos);
  const Result unk = run({"decide", "mon", "--m", "1", "--n", "2", "(0; x1^2)", "(0; x2^2 x1^2 X2^2)", "--bound", "1"});
  CHECK(unk.out.find("bound: 1") != std::string::npos);
}

TEST_CASE("json witnesses re-verify through endo apply") {
  const Result r = run({"decide", "end", "--m", "1", "--n", "2", "(1; x1 x2)", "(3; x2^2)", "--json"});
  REQUIRE(r.code == cli::exit_yes);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["decision"] == "yes");
  CHECK(doc["verified"] == true);
  const std::string endo = doc["witness"].dump();
  const Result applied = run({"endo", "apply", endo, "(1; x1 x2)"});
  REQUIRE(applied.code == 0);
  CHECK(applied.out == "(3; x2^2)\n");

  const Result no = run({"decide", "aut", "--m", "1", "--n", "2", "(2; 1)", "(3; 1)", "--json"});
  const auto nodoc = nlohmann::json::parse(no.out);
  CHECK(nodoc["decision"] == "no");
  REQUIRE(nodoc["reasons"].size() >= 1);
  CHECK(nodoc["reasons"][0]["code"] == "abelian-unsolvable");
  CHECK(nodoc["reasons"][0]["rechecked"] == true);
}

TEST_CASE("endo subcommands") {
  const std::string swap = R"({"type":"I","m":1,"n":2,"phi":["x2","x1"],"Q":[[1]],"P":[[0],[0]]})";
  Result r = run({"endo", "classify", swap});
  CHECK(r.code == 0);
  CHECK(r.out.find("auto") != std::string::npos);
  r = run({"endo", "inverse", swap});
  CHECK(r.code == 0);
  CHECK(deserialize(lines(r.out).at(0)) == deserialize(swap));
  r = run({"endo", "compose", swap, swap});
  CHECK(r.code == 0);
  CHECK(deserialize(lines(r.out).at(0)) == Endomorphism::identity(1, 2));
  r = run({"endo", "recognize", "--m", "1", "--n", "2", "(2; 1)", "(0; x2)", "(1; x1 x2)"});
  CHECK(r.code == 0);
  CHECK(deserialize(lines(r.out).at(0)) ==
        Endomorphism::type1(FreeImages{W("x2"), W("x1 x2")}, M({{2}}), M({{0}, {1}})));
  const std::string mono = R"({"type":"I","m":1,"n":2,"phi":["x1^2","x2"],"Q":[[1]],"P":[[0],[0]]})";
  CHECK(run({"endo", "inverse", mono}).code == cli::exit_no);
}

TEST_CASE("free and element subcommands") {
  CHECK(run({"free", "min", "--n", "2", "x1 x2 x1"}).out.size() > 0);
  CHECK(run({"free", "equiv", "--n", "2", "x1", "x1 x2"}).code == cli::exit_yes);
  CHECK(run({"free", "equiv", "--n", "2", "x1", "x1^2"}).code == cli::exit_no);
  CHECK(run({"free", "primitive", "--n", "2", "x1 x2 X1 X2"}).code == cli::exit_no);
  CHECK(run({"el", "mul", "--m", "1", "--n", "2", "(1; x1)", "(2; X1 x2)"}).out == "(3; x2)\n");
  CHECK(run({"el", "inv", "--m", "1", "--n", "2", "(1; x1 x2)"}).out == "(-1; X2 X1)\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::exit_usage);
  CHECK(run({"decide", "bogus", "--m", "1", "--n", "2", "(0; x1)", "(0; x1)"}).code == cli::exit_usage);
  const Result bad = run({"decide", "aut", "--m", "1", "--n", "2", "(0; x3)", "(0; x1)"});
  CHECK(bad.code == cli::exit_usage);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"decide", "aut", "--m", "1", "--n", "2", "(0; x1", "(0; x1)"}).code == cli::exit_usage);
  CHECK(run({"decide", "aut", "--m", "1", "--n", "2", "(0; x1)", "(0; x1)", "--bound", "0"}).code ==
        cli::exit_usage);
  CHECK(run({"endo", "apply", "{\"type\":", "(0; x1)"}).code == cli::exit_usage);
  CHECK(run({"endo", "apply", "/nonexistent/endo.json", "(0; x1)"}).code == cli::exit_usage);
  CHECK(run({"--help"}).code == 0);
}
