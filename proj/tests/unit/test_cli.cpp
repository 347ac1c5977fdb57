#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult lcmlat_run(std::vector<std::string> args) {
  args.insert(args.begin(), "lcmlat");
  std::ostringstream out;
  std::ostringstream err;
  const int code = lcmlat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LCMLAT_TEST_DATA_DIR) + "/" + name; }

nlohmann::json json_of(const CliResult& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(lcmlat_run({}).code, 2);
  EXPECT_EQ(lcmlat_run({"frobnicate"}).code, 2);
  EXPECT_EQ(lcmlat_run({"enumerate"}).code, 2);
  EXPECT_EQ(lcmlat_run({"enumerate", "-n", "10"}).code, 2);
  EXPECT_EQ(lcmlat_run({"--format", "xml", "enumerate", "-n", "3"}).code, 2);
  EXPECT_EQ(lcmlat_run({"analyze"}).code, 2);
  EXPECT_EQ(lcmlat_run({"analyze", "--set", data("missing.set")}).code, 2);
  EXPECT_EQ(lcmlat_run({"--help"}).code, 0);
}

TEST(Cli, EnumerateSmall) {
  const CliResult one = lcmlat_run({"--format", "json", "enumerate", "-n", "1"});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(json_of(one)["results"]["counts"]["meet_semilattices"], 1);
  const CliResult three = lcmlat_run({"--format", "json", "enumerate", "-n", "3"});
  EXPECT_EQ(json_of(three)["results"]["counts"]["meet_semilattices"], 2);
  EXPECT_EQ(json_of(three)["results"]["counts"]["total_posets"], 5);
}

TEST(Cli, EnumerateEight) {
  const CliResult r = lcmlat_run({"--format", "json", "enumerate", "-n", "8", "--representatives"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r)["results"];
  EXPECT_EQ(j["counts"]["meet_semilattices"], 1078);
  EXPECT_EQ(j["counts"]["after_cover_filter"], 84);
  EXPECT_EQ(j["counts"]["after_mobius_filter"], 10);
  EXPECT_EQ(j["class_tags"].size(), 10U);
  EXPECT_EQ(j["representatives"].size(), 10U);
}

TEST(Cli, VerifyCounterexample) {
  const CliResult r = lcmlat_run({"verify-counterexample"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sum      0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("- 1020180525) / 1020180525"), std::string::npos) << r.out;

  const auto two = json_of(lcmlat_run({"--format", "json", "verify-counterexample", "--alpha", "2"}));
  EXPECT_EQ(two["results"]["singular"], false);
  EXPECT_NE(two["results"]["psi"], "0/1");

  const auto dual = json_of(lcmlat_run({"--format", "json", "verify-counterexample", "--dual"}));
  EXPECT_EQ(dual["results"]["dual"]["lcm_closed"], true);
  EXPECT_EQ(dual["results"]["dual"]["set"].size(), 9U);
  EXPECT_EQ(dual["results"]["dual"]["det_dual_join"], "0/1");
}

TEST(Cli, FindAlphaOnSets) {
  const CliResult r = lcmlat_run({"--format", "json", "--tol", "1e-7", "find-alpha", "--values", "1,3,5,45"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r)["results"];
  EXPECT_EQ(j["found"], true);
  EXPECT_NEAR(std::stod(j["alpha0"]["lo"].get<std::string>()), 0.328594, 1e-5);

  const CliResult none = lcmlat_run({"find-alpha", "--values", "1 3 5 15"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("no sign change"), std::string::npos);

  EXPECT_EQ(lcmlat_run({"find-alpha", "--set", data("diamond45.set"), "--index", "5"}).code, 2);
}

TEST(Cli, FindAlphaOnStructures) {
  const CliResult chain = lcmlat_run({"find-alpha", "--structure", data("chain3.poset")});
  EXPECT_EQ(chain.code, 1);
  EXPECT_NE(chain.err.find("error:"), std::string::npos);

  const CliResult diamond = lcmlat_run({"--format", "json", "find-alpha", "--structure", data("diamond.poset")});
  ASSERT_EQ(diamond.code, 0) << diamond.err;
  EXPECT_GT(std::stod(json_of(diamond)["results"]["alpha0"]["lo"].get<std::string>()), 0.0);
}

TEST(Cli, Analyze) {
  const CliResult smith = lcmlat_run({"--format", "json", "analyze", "--set", data("smith12.set")});
  ASSERT_EQ(smith.code, 0) << smith.err;
  EXPECT_EQ(json_of(smith)["results"]["verdict"], "nonsingular");

  const auto nine = json_of(lcmlat_run(
      {"--format", "json", "analyze", "--values", "1,3,5,7,195,291,1407,4025,1020180525"}));
  EXPECT_EQ(nine["results"]["verdict"], "singular");
  EXPECT_EQ(nine["results"]["witnesses"], nlohmann::json::array({9}));

  const CliResult single = lcmlat_run({"analyze", "--values", "1"});
  EXPECT_NE(single.out.find("det [S]_{N^a}    1/1"), std::string::npos) << single.out;

  const CliResult dot = lcmlat_run({"--format", "dot", "analyze", "--values", "1,3,5,45"});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0U);

  EXPECT_EQ(lcmlat_run({"analyze", "--values", "2,3"}).code, 1);
  EXPECT_EQ(lcmlat_run({"analyze", "--values", "1,3,5,45", "--alpha", "x"}).code, 1);
}

TEST(Cli, Realize) {
  EXPECT_EQ(lcmlat_run({"realize", data("diamond.poset")}).out, "1 3 5 105\n");
  EXPECT_EQ(lcmlat_run({"realize", data("chain3.poset")}).out, "1 3 15\n");
  EXPECT_EQ(lcmlat_run({"realize", data("diamond.poset"), "--inflate", "1:1"}).code, 1);
  EXPECT_EQ(lcmlat_run({"realize", data("diamond.poset"), "--inflate", "4:1"}).out,
            "1 3 5 735\n");
  EXPECT_EQ(lcmlat_run({"realize", data("diamond.poset"), "--inflate", "oops"}).code, 2);
  EXPECT_EQ(lcmlat_run({"realize", "--class", "8_J", "--primes", "2,3,5,7,11,13,17"}).code, 0);
  EXPECT_EQ(lcmlat_run({"realize", data("chain3.poset"), "--primes", "3,4"}).code, 1);
}

TEST(Cli, CorpusIsReproducible) {
  const CliResult a = lcmlat_run({"--seed", "11", "corpus", "--count", "20"});
  const CliResult b = lcmlat_run({"--seed", "11", "corpus", "--count", "20"});
  const CliResult c = lcmlat_run({"--seed", "12", "corpus", "--count", "20"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  const CliResult odd = lcmlat_run({"--seed", "3", "corpus", "--odd", "--count", "5"});
  ASSERT_EQ(odd.code, 0);
  std::istringstream lines(odd.out);
  for (std::string token; std::getline(lines, token, '\n');) {
    std::istringstream fields(token);
    for (std::string x; std::getline(fields, x, ',');) EXPECT_EQ((x.back() - '0') % 2, 1) << x;
  }
}

}  // namespace
