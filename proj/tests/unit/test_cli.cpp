#include <gtest/gtest.h>

#include <functional>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zsr::cli::run(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(run({"count", "sequences", "--group", "2,2", "--length", "3"}).out, "{\"count\":\"5\"}\n");
  EXPECT_EQ(run({"biject", "reciprocity", "--group", "7", "--other", "5", "--vector",
                 "0,0,1,1,1,0,2"})
                .out,
            "{\"vector\":\"1,2,0,3,1\"}\n");
  EXPECT_EQ(run({"count", "catalan", "--a", "7", "--b", "5"}).out, "{\"count\":\"66\"}\n");
}

TEST(Cli, EveryCommandEmitsJsonWithStringNumbers) {
  const std::vector<std::vector<std::string>> commands{
      {"count", "subsets", "--group", "6", "--size", "2"},
      {"count", "pair-dim", "--group", "3", "--p", "2", "--q", "1", "--m", "2"},
      {"enum", "sequences", "--group", "3", "--length", "2"},
      {"enum", "subsets", "--group", "5", "--size", "2"},
      {"enum", "dyck", "--a", "3", "--b", "2"},
      {"enum", "pairs", "--group", "2", "--p", "1", "--size", "1"},
      {"biject", "seq-to-dyck", "--group", "7", "--vector", "0,0,1,1,1,0,2"},
      {"biject", "dyck-to-seq", "--group", "7", "--length", "5", "--gaps", "1,1,1,0,2,0,0"},
      {"biject", "subset-to-dyck", "--group", "5", "--vector", "0,1,0,0,1"},
      {"biject", "dyck-to-subset", "--group", "5", "--size", "2", "--steps", "00101"},
      {"biject", "complement", "--group", "4", "--vector", "1,0,0,0"},
      {"biject", "complement", "--group", "4", "--vector", "0,1,0,1", "--translate"},
      {"biject", "pair", "--group", "2", "--other", "2", "--sequence", "1,0", "--subset", "1,0"},
      {"poincare", "table", "--group", "2,2", "--target", "1", "--max-s", "3", "--max-t", "3"},
      {"poincare", "check", "--group", "3", "--max-s", "3", "--max-t", "3"},
      {"verify", "subset-reci", "--max-order", "8"},
      {"verify", "gcp", "--max-order", "8", "--primes", "2,3"},
      {"verify", "cnr", "--n", "2", "--m", "6", "--r", "2"},
      {"verify", "series", "--max-order", "3", "--max-s", "3", "--max-t", "3"},
      {"scan", "reciprocity", "--max-order", "6"},
  };
  for (const auto& cmd : commands) {
    const Result first = run(cmd);
    EXPECT_EQ(first.code, 0) << cmd[0] << " " << cmd[1] << ": " << first.out;
    const auto j = nlohmann::json::parse(first.out);
    std::function<void(const nlohmann::json&)> no_numbers = [&](const nlohmann::json& v) {
      EXPECT_FALSE(v.is_number()) << first.out;
      if (v.is_structured()) {
        for (const auto& item : v) no_numbers(item);
      }
    };
    no_numbers(j);
    EXPECT_EQ(run(cmd).out, first.out);  // deterministic
  }
}

TEST(Cli, BijectionOutputs) {
  EXPECT_EQ(run({"biject", "dyck-to-seq", "--group", "7", "--length", "5", "--gaps",
                 "1,1,1,0,2,0,0"})
                .out,
            "{\"vector\":\"0,0,1,1,1,0,2\",\"shift\":\"5\"}\n");
  EXPECT_EQ(run({"biject", "complement", "--group", "4", "--vector", "1,0,0,0"}).out,
            "{\"vector\":\"1,1,0,1\"}\n");
}

TEST(Cli, ErrorsAndExitCodes) {
  Result r = run({"count", "catalan", "--a", "4", "--b", "6"});
  EXPECT_EQ(r.code, 2);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"], "precondition");
  EXPECT_TRUE(j.contains("reason"));

  r = run({"count", "sequences", "--group", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "usage");

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);

  r = run({"verify", "cnr", "--n", "2", "--m", "4", "--r", "2"});
  EXPECT_EQ(r.code, 2);

  r = run({"--limit", "10", "enum", "subsets", "--group", "12", "--size", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "limit");
}

TEST(Cli, PrettyOnlyAddsWhitespace) {
  const std::vector<std::string> cmd{"poincare", "table", "--group", "3", "--max-s", "2", "--max-t", "2"};
  std::vector<std::string> pretty{"--pretty"};
  pretty.insert(pretty.end(), cmd.begin(), cmd.end());
  const Result a = run(cmd);
  const Result b = run(pretty);
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out), nlohmann::json::parse(b.out));
}

TEST(Cli, LimitFromEnvironment) {
  setenv("ZSR_ENUM_LIMIT", "10", 1);
  const Result r = run({"enum", "subsets", "--group", "12", "--size", "6"});
  unsetenv("ZSR_ENUM_LIMIT");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"enum", "subsets", "--group", "12", "--size", "6"}).code, 0);
}
