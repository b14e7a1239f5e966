#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "qlink/qalgebra/poly_json.hpp"
#include "support/data.hpp"

using qlink::Json;
using qlink::testing::data_path;

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

CliResult run(const std::string& args) {
  const std::string err_file = std::filesystem::temp_directory_path() / "qlink_cli_test_err.txt";
  const std::string cmd = std::string(QLINK_CLI_PATH) + " " + args + " 2>" + err_file;
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_file);
  r.err.assign(std::istreambuf_iterator<char>(in), {});
  return r;
}

}  // namespace

TEST(Cli, ClassifyFigureOne) {
  const CliResult r = run("classify " + data_path("fig1.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.dump().find("\"7/3\"") != std::string::npos);
  EXPECT_TRUE(j.dump().find("\"verdict\":true") != std::string::npos);
}

TEST(Cli, UnknotColoredJones) {
  const CliResult r = run("cjones " + data_path("unknot.pd") + " -n 3");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(qlink::laurent_from_json(j.at("poly")),
            qlink::LaurentPoly('v', {{4, 1}, {0, 1}, {-4, 1}}));
}

TEST(Cli, VerifyFigureOne) {
  const CliResult r = run("verify " + data_path("fig1.json") + " --theorem degree --n-range 2..3");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::accept(r.out));
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::string& args : std::vector<std::string>{"corpus --max-edges 2 --max-crossings 4 --random 5",
                                 "classify " + data_path("square_multi.json"),
                                 "bracket " + data_path("fig1.json") + " --threads 2",
                                 "volume " + data_path("fig1.json")}) {
    const CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args << a.err;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, ThreadBudgetDoesNotChangeOutput) {
  const std::string base = "cjones " + data_path("p777.json") + " --n-range 2..3 --engine sweep";
  const CliResult one = run(base + " --threads 1"), many = run(base + " --threads 3");
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, InvariantRecordFields) {
  const CliResult r = run("bracket " + data_path("fig1.json") + " --timing");
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  for (const char* k : {"invariant", "engine", "poly", "runtime_ms", "states_evaluated"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j.at("invariant"), "bracket");
  EXPECT_FALSE(Json::parse(run("bracket " + data_path("fig1.json")).out).contains("runtime_ms"));
  const Json lam = Json::parse(run("lambda " + data_path("unknot.pd")).out);
  EXPECT_EQ(lam.at("invariant"), "lambda");
}

TEST(Cli, ErrorsAreJsonOnStderr) {
  const CliResult missing = run("classify /nonexistent/graph.json");
  EXPECT_EQ(missing.code, 2);
  const Json e = Json::parse(missing.err);
  EXPECT_TRUE(e.at("error").contains("kind"));
  EXPECT_TRUE(e.at("error").contains("message"));
  EXPECT_TRUE(missing.out.empty());
  const CliResult bad_range = run("cjones " + data_path("unknot.pd") + " --n-range 3..1");
  EXPECT_NE(bad_range.code, 0);
  EXPECT_TRUE(Json::accept(bad_range.err));
  const CliResult not_graph = run("classify " + data_path("unknot.pd"));
  EXPECT_NE(not_graph.code, 0);
  EXPECT_TRUE(Json::accept(not_graph.err));
}

TEST(Cli, OutFileAndTwistFlag) {
  const std::string out = std::filesystem::temp_directory_path() / "qlink_cli_twist.json";
  const CliResult r = run("twist " + data_path("square_multi.json") + " --out " + out);
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  const Json j = Json::parse(in);
  EXPECT_TRUE(j.dump().find("\"m\":3") != std::string::npos) << j.dump();
  const CliResult c = run("classify " + data_path("square_multi.json") + " --add-full-twists 3");
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(c.out.find("\"predicate\": true") != std::string::npos);
}
