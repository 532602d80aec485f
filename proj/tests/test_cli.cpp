#include <gtest/gtest.h>

#include <lojex/cli.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace lojex;
using cli::Request;
using cli::run_command;

static Request req(std::string sub) {
  Request r;
  r.subcommand = std::move(sub);
  r.json = true;
  return r;
}

static std::string value_text(const cli::Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v["num"].get<std::string>() + "/" + v["den"].get<std::string>();
}

TEST(Cli, GradientExampleValueAndDeterminacy) {
  auto r = req("exponent");
  r.weights = "1,2,3";
  r.function = "x1*x3+x2^2+x1^2*x2";
  auto rep = run_command(r);
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_EQ(value_text(rep.json["value"]), "1/1");
  EXPECT_EQ(rep.json["determinacy"], 2);
  EXPECT_NE(rep.human.find("value: 1\n"), std::string::npos);
  EXPECT_NE(rep.human.find("determinacy s0: 2"), std::string::npos);
}

TEST(Cli, FiveVariableTupleHasNoMatching) {
  auto r = req("matching");
  r.weights = "1,2,3,4,6";
  r.ideals = "x1^11 | x2^3*x4 | x3*x5 | x2^4,x4^2 | x3^2,x5";
  auto rep = run_command(r);
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(rep.json["witness"].is_null());
  EXPECT_NE(rep.human.find("no w-matching"), std::string::npos);
}

TEST(Cli, MatchingWitnessIsOneBased) {
  auto r = req("matching");
  r.weights = "1,2,3";
  r.ideals = "x^12|y^6|z^4";
  auto rep = run_command(r);
  ASSERT_FALSE(rep.json["witness"].is_null());
  EXPECT_EQ(rep.json["witness"]["i0"], 1);
  EXPECT_EQ(rep.json["witness"]["tau"], cli::Json::parse("[1,2,3]"));
}

TEST(Cli, MonomialIdealExponent) {
  auto r = req("ideal");
  r.op = "l0";
  r.gens = "x^4,y^2";
  auto rep = run_command(r);
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_EQ(value_text(rep.json["value"]), "4/1");
  EXPECT_EQ(rep.json["certificate"], "ExactByAxis");
}

TEST(Cli, StableKeysInOrder) {
  auto r = req("sigma");
  r.ideals = "x^2,y^2|x^3,y^3";
  auto rep = run_command(r);
  std::vector<std::string> keys;
  for (auto it = rep.json.begin(); it != rep.json.end(); ++it) keys.push_back(it.key());
  std::vector<std::string> expect{"command", "inputs",      "value",       "certificate", "witness",
                                  "trace",   "warnings",    "determinacy", "details"};
  EXPECT_EQ(keys, expect);
  EXPECT_EQ(value_text(rep.json["value"]), "6/1");
}

TEST(Cli, InfiniteSigmaSerializesAsString) {
  auto r = req("sigma");
  r.ideals = "x*y,y^4|x*y^2,y^5";
  EXPECT_EQ(run_command(r).json["value"], "infinity");
}

TEST(Cli, JsonRoundTripsAndIsDeterministic) {
  for (const char* f : {"x^12+y^6+z^4", "x^16+y^8+x*z^5"}) {
    auto r = req("exponent");
    r.weights = "1,2,3";
    r.function = f;
    r.seed = 7;
    auto a = run_command(r).json.dump(2);
    auto b = run_command(r).json.dump(2);
    EXPECT_EQ(a, b);
    EXPECT_EQ(cli::Json::parse(a).dump(2), a);
  }
}

TEST(Cli, JobsDoNotChangeOutput) {
  auto r = req("exponent");
  r.ideals = "x^3,y^5|x^4,x*y^2,y^6";
  r.weights = "1,1";
  r.smax = 4;
  auto one = run_command(r);
  r.jobs = 4;
  auto four = run_command(r);
  EXPECT_EQ(one.json.dump(), four.json.dump());
}

TEST(Cli, ExitCodes) {
  auto bad = req("exponent");
  bad.weights = "1,1";
  bad.function = "x^2+";
  EXPECT_EQ(run_command(bad).exit_code, 1);

  auto unknown = req("ideal");
  unknown.op = "volume";
  unknown.gens = "x";
  EXPECT_EQ(run_command(unknown).exit_code, 1);

  auto missing = req("matching");
  missing.ideals = "x|y";
  EXPECT_EQ(run_command(missing).exit_code, 1);

  // Not an isolated singularity: a hypothesis failure, reported with warnings.
  auto degenerate = req("exponent");
  degenerate.weights = "1,1";
  degenerate.function = "x^2*y";
  auto rep = run_command(degenerate);
  EXPECT_EQ(rep.exit_code, 2);
  EXPECT_FALSE(rep.json["warnings"].empty());
}

TEST(Cli, CorpusPassesEveryItem) {
  auto rep = run_command(req("corpus"));
  EXPECT_EQ(rep.exit_code, 0);
  ASSERT_EQ(rep.json["details"]["items"].size(), 9u);
  for (const auto& it : rep.json["details"]["items"]) EXPECT_TRUE(it["passed"].get<bool>()) << it.dump();
}

static std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(LOJEX_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 512> buf;
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

TEST(CliBinary, ExamplesFromTheShell) {
  auto [rc, out] = shell("ideal l0 --gens 'x^4,y^2'");
  EXPECT_EQ(rc, 0);
  EXPECT_NE(out.find("value: 4"), std::string::npos);
  EXPECT_NE(out.find("ExactByAxis"), std::string::npos);

  auto [rc2, out2] = shell("exponent --weights 1,2,3 --function 'x1*x3+x2^2+x1^2*x2' --json");
  EXPECT_EQ(rc2, 0);
  auto j = cli::Json::parse(out2);
  EXPECT_EQ(j["determinacy"], 2);

  EXPECT_EQ(shell("ideal").first, 1);
  EXPECT_EQ(shell("frobnicate").first, 1);
  EXPECT_EQ(shell("exponent --weights 1,x --function x").first, 1);
}
