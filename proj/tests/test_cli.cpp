#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FUSION_EXT) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(FUSION_DATA) + "/" + name; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("catalog").status, 0);
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("analyze no-such-ring").status, 1);
  EXPECT_EQ(run("obstruct near-group:3").status, 1);
  EXPECT_EQ(run("verify " + data("broken-near-group.json")).status, 3);
  EXPECT_EQ(run("analyze " + data("broken-near-group.json")).status, 3);
  EXPECT_EQ(run("graph near-group:3 --generator Y").status, 1);
}

TEST(Cli, ParseErrorExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "fusion-ext-syntax.json";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("{ \"labels\": [\"1\" ", f);
    std::fclose(f);
  }
  EXPECT_EQ(run("verify " + path.string()).status, 2);
  std::filesystem::remove(path);
}

TEST(Cli, NumericalFailureExitCode) {
  EXPECT_EQ(run("--tol 0 analyze near-group:3").status, 4);
}

TEST(Cli, ObstructEchoesAssumptions) {
  const auto r = run("--format json obstruct near-group:3 --group-order 2 --assume-self-dual");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["assumptions"]["self_dual"], true);
  EXPECT_EQ(j["assumptions"]["trivial_out"], false);
  EXPECT_EQ(j["o3_status"], "vanishes-certified");
  EXPECT_EQ(j["extension_count"], "2");
  const auto text = run("obstruct near-group:3 --group-order 2 --assume-trivial-out").out;
  EXPECT_NE(text.find("assume-self-dual=no assume-trivial-out=yes"), std::string::npos);
}

TEST(Cli, ExtendReportsRingsAndMultiplicity) {
  const auto r = run("--format json extend near-group-bimodule:3 --generator b");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["candidates"].size(), 3u);
  ASSERT_EQ(j["rings"].size(), 1u);
  EXPECT_EQ(j["extensions_per_ring"], "2");
  EXPECT_EQ(j["rings"][0]["supertransitivity"], 2);
  EXPECT_EQ(j["rings"][0]["spokes"], nlohmann::json::parse("[2,2,2,1]"));
}

TEST(Cli, ExtendSavesLoadableDocuments) {
  const auto dir = std::filesystem::temp_directory_path() / "fusion-ext-save";
  std::filesystem::remove_all(dir);
  ASSERT_EQ(run("extend " + data("near-group-bimodule-3.json") + " --save " + dir.string()).status,
            0);
  const auto saved = dir / "extension-0.json";
  ASSERT_TRUE(std::filesystem::exists(saved));
  EXPECT_EQ(run("verify " + saved.string()).status, 0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> commands{
       "catalog", "--format json catalog", "analyze near-group:3", "bound s3",
        "--format json analyze " + data("ising-inferred-dual.json"),
        "obstruct near-group:2 --group-order 2 --assume-self-dual --assume-trivial-out",
        "extend near-group-bimodule:3 --generator b", "--jobs 3 extend regular:cyclic:4",
        "extend near-group-bimodule:3 --generator b --dot", "graph fibonacci --generator tau --dot",
        "--format json graph near-group:3 --generator X", "verify " + data("broken-near-group.json")};
  for (const auto& args : commands) {
    const auto first = run(args);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(run(args).out, first.out) << args;
    EXPECT_FALSE(first.out.empty()) << args;
  }
}

TEST(Cli, JobsDoNotChangeOutput) {
  EXPECT_EQ(run("--jobs 1 extend regular:cyclic:6").out, run("--jobs 4 extend regular:cyclic:6").out);
}
