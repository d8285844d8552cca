#include "pshodge_cli/cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "pshodge");
  std::ostringstream out, err;
  const int code = pshodge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pshodge_cli_test_" + name);
}

}  // namespace

TEST(Cli, EvalExamples) {
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1", "--space", "ps", "(2*lambda2 - lambda1^2)*psi1^2"}).out, "-1/576\n");
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1", "--space", "stable", "(2*lambda2 - lambda1^2)*psi1^2"}).out, "0\n");
  const Invocation bad = run({"eval", "--g", "1", "--n", "1", "--space", "ps", "psi1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("(1,1) is not a pseudostable index"), std::string::npos);
  EXPECT_NE(bad.err.find("{(0,0), (0,1), (0,2), (1,0), (1,1), (2,0)}"), std::string::npos);
}

TEST(Cli, EvalErrors) {
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "2", "psi3"}).code, 1);
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1", "psi1^"}).code, 1);
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1", "--space", "weird", "psi1^4"}).code, 1);
  EXPECT_EQ(run({"eval", "--g", "1", "--n", "0", "1"}).code, 1);
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonHasFiveKeys) {
  const Invocation r = run({"eval", "--g", "2", "--n", "1", "--space", "ps", "--json", "lambda1*psi1^3"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j.size(), 5u);
  EXPECT_EQ(j["g"], 2);
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["space"], "ps");
  EXPECT_EQ(j["expr"], "lambda1*psi1^3");
  EXPECT_EQ(j["value"], "1/480");
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"eval", "--g", "3", "--n", "2", "--space", "ps", "lambda1^2*psi1^3*psi2^3"};
  const Invocation a = run(args);
  const Invocation b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}

TEST(Cli, Series) {
  const Invocation r = run({"series", "--n", "1", "--g-max", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2\t-1/576\t-1/576\tPASS"), std::string::npos);
  EXPECT_NE(r.out.find("3\t-1/27648\t-1/27648\tPASS"), std::string::npos);
  EXPECT_NE(run({"series", "--n", "2", "--g-max", "2"}).out.find("2\t-1/576\t-1/576\tPASS"), std::string::npos);
  EXPECT_EQ(run({"series", "--g-max", "7"}).code, 1);
  EXPECT_EQ(run({"series", "--n", "0"}).code, 1);
}

TEST(Cli, BatchKeepsOrderAndReportsFailures) {
  const auto path = temp_path("batch.txt");
  {
    std::ofstream f(path);
    f << "lambda1*psi1^3\npsi9\n\n(2*lambda2 - lambda1^2)*psi1^2\nlambda2*psi1^2\n1/0\n";
  }
  const Invocation serial = run({"eval", "--g", "2", "--n", "1", "--space", "ps", "--batch", path.string()});
  const Invocation parallel = run({"eval", "--g", "2", "--n", "1", "--space", "ps", "--batch", path.string(), "--jobs", "4"});
  EXPECT_EQ(serial.code, 1);
  EXPECT_EQ(serial.out, parallel.out);
  std::istringstream lines(serial.out);
  std::string line;
  std::vector<std::string> got;
  while (std::getline(lines, line)) got.push_back(line);
  ASSERT_EQ(got.size(), 5u);
  EXPECT_EQ(got[0], "1\t1/480");
  EXPECT_EQ(got[1].rfind("2\terror: ", 0), 0u);
  EXPECT_EQ(got[2], "4\t-1/576");
  EXPECT_EQ(got[3], "5\t7/5760");
  EXPECT_EQ(got[4].rfind("6\terror: ", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, SelfcheckAndMutation) {
  const Invocation good = run({"selfcheck"});
  EXPECT_EQ(good.code, 0) << good.out;
  EXPECT_EQ(good.out.find("FAIL"), std::string::npos);
  const Invocation flipped = run({"selfcheck", "--flip-excess-sign"});
  EXPECT_EQ(flipped.code, 2);
  EXPECT_NE(flipped.out.find("FAIL  hat-lambda_1^2 expansion"), std::string::npos);
}

TEST(Cli, CacheCommands) {
  const auto path = temp_path("cache.txt");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"cache", "store", path.string(), "--g-max", "2"}).code, 0);
  const Invocation loaded = run({"cache", "load", path.string()});
  EXPECT_EQ(loaded.code, 0);
  EXPECT_NE(loaded.out.find("loaded "), std::string::npos);
  EXPECT_EQ(run({"cache", "verify", path.string(), "--sample", "0"}).code, 0);

  // warm cache gives the same answers as a cold one
  const std::vector<std::string> args{"eval", "--g", "2", "--n", "1", "--space", "ps", "(2*lambda2 - lambda1^2)*psi1^2"};
  auto with_cache = args;
  with_cache.insert(with_cache.end(), {"--cache", path.string()});
  EXPECT_EQ(run(with_cache).out, run(args).out);

  std::string text;
  {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  const auto tampered = temp_path("tampered.txt");
  {
    std::ofstream f(tampered);
    f << text.substr(0, text.find('\n') + 1) << "1\t1\t1\t1\t23\n";
  }
  EXPECT_EQ(run({"cache", "verify", tampered.string()}).code, 1);
  EXPECT_EQ(run({"eval", "--g", "2", "--n", "1", "psi1^4", "--cache", tampered.string()}).code, 1);
  {
    std::ofstream f(tampered);
    f << "PSHODGE-WKCACHE v0\n";
  }
  EXPECT_EQ(run({"cache", "load", tampered.string()}).code, 1);
  std::filesystem::remove(path);
  std::filesystem::remove(tampered);
}
