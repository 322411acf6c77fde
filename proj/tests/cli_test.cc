// Copyright 2026 The qgame-iso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "qgi/io.h"

namespace qgi::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("qgi_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    Put("chicken1.json", GameToJson(testing::Chicken1()).dump());
    Put("chicken2.json", GameToJson(testing::Chicken2()).dump());
    Put("converse1.json", GameToJson(testing::ConverseGame1()).dump());
    Put("converse2.json", GameToJson(testing::ConverseGame2()).dump());
    Put("sqrt3.json", StateToJson(testing::Sqrt3State()).dump());
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Put(const std::string& name, const std::string& contents) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, NashListsChickenEquilibria) {
  const Result r = RunCli({"nash", Path("chicken1.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("pure Nash equilibria (2): (t, r), (b, l)"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, NashJsonRoundTripsTheGame) {
  const Result r =
      RunCli({"nash", Path("chicken1.json"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = ParseJson(r.out);
  EXPECT_EQ(GameFromJson(j.at("game")), testing::Chicken1());
  EXPECT_EQ(j.at("pure_nash").size(), 2u);
}

TEST_F(CliTest, QuantizeRefinedPrintsFractions) {
  const Result r =
      RunCli({"quantize", "--scheme", "refined", "--state", Path("sqrt3.json"),
              "--game", Path("chicken1.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("(8/3 (2.666667), 13/3 (4.333333))"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, QuantizeJsonMatchesLibrary) {
  const Result r = RunCli({"quantize", "--scheme", "correlated", "--state",
                           Path("sqrt3.json"), "--game", Path("chicken2.json"),
                           "--format", "json", "--both"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = ParseJson(r.out);
  const BimatrixGame out = GameFromJson(j.at("output"));
  EXPECT_NEAR(out.at(1, 2).row, 7.0 / 3, 1e-9);
  EXPECT_NEAR(out.at(1, 2).col, 2.0 / 3, 1e-9);
  EXPECT_LT(j.at("max_path_difference").get<double>(), 1e-9);
}

TEST_F(CliTest, IsoExitCodes) {
  Result r = RunCli({"iso", Path("chicken1.json"), Path("chicken2.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("phi2: (0 1)  [l -> r', r -> l']"), std::string::npos);
  r = RunCli({"iso", Path("converse1.json"), Path("converse2.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("NOT ISOMORPHIC"), std::string::npos);
  r = RunCli(
      {"iso", Path("converse1.json"), Path("converse2.json"), "--strict"});
  EXPECT_EQ(r.code, kExitVerdict);
}

TEST_F(CliTest, MalformedJsonReportsLineAndColumn) {
  const std::string bad = Put("bad.json", "{\n  \"payoffs\": [[1, 2],,]\n}");
  const Result r = RunCli({"nash", bad});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("bad.json:2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, DimensionErrorsNameTheObject) {
  const Result r = RunCli({"quantize", "--scheme", "mw", "--ops1",
                           "identity-sigma", "--ops2", "iqbal3", "--state",
                           Path("sqrt3.json"), "--game",
                           Path("chicken1.json")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("DimensionMismatch"), std::string::npos);
  EXPECT_NE(r.err.find("'iqbal3'"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("chicken1.json"), std::string::npos) << r.err;
}

TEST_F(CliTest, ArgumentErrors) {
  EXPECT_EQ(RunCli({}).code, kExitInputError);
  EXPECT_EQ(RunCli({"nash", Path("missing.json")}).code, kExitInputError);
  EXPECT_EQ(RunCli({"nash", Path("chicken1.json"), "--format", "xml"}).code,
            kExitInputError);
  EXPECT_EQ(RunCli({"quantize", "--scheme", "bogus", "--state",
                    Path("sqrt3.json"), "--game", Path("chicken1.json")})
                .code,
            kExitInputError);
  EXPECT_EQ(RunCli({"quantize", "--scheme", "refined", "--trace", "--oracle",
                    "--state", Path("sqrt3.json"), "--game",
                    Path("chicken1.json")})
                .code,
            kExitInputError);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, InvarianceVerdicts) {
  Result r = RunCli({"invariance", "--scheme", "refined", "--g1",
                     Path("chicken1.json"), "--g2", Path("chicken2.json"),
                     "--state", Path("sqrt3.json"), "--strict"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verdict: PRESERVES"), std::string::npos);
  r = RunCli({"invariance", "--scheme", "correlated", "--g1",
              Path("chicken1.json"), "--g2", Path("chicken2.json"), "--state",
              Path("sqrt3.json")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("verdict: VIOLATES"), std::string::npos);
  r = RunCli({"invariance", "--scheme", "correlated", "--g1",
              Path("chicken1.json"), "--g2", Path("chicken2.json"), "--state",
              Path("sqrt3.json"), "--strict", "--format", "json"});
  EXPECT_EQ(r.code, kExitVerdict);
  EXPECT_EQ(ParseJson(r.out).at("verdict"), "VIOLATES");
}

TEST_F(CliTest, RandomTrialsAreThreadIndependentAndReplayable) {
  const std::vector<std::string> base = {
      "invariance", "--scheme", "correlated", "--random", "--shape", "2x2",
      "--trials",   "60",       "--seed",     "7",        "--format", "json"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return RunCli(args);
  };
  const Result one = with({"--threads", "1"});
  const Result four =
      with({"--threads", "4", "--certificates-out", Path("certs")});
  ASSERT_EQ(one.code, kExitOk) << one.err;
  EXPECT_EQ(one.out, four.out);
  const Result replay = RunCli(
      {"invariance", "--certificate", Path("certs/certificate_000.json")});
  EXPECT_EQ(replay.code, kExitOk) << replay.err;
  EXPECT_NE(replay.out.find("verdict: VIOLATES"), std::string::npos);
}

TEST_F(CliTest, DemoIsByteStable) {
  const Result first = RunCli({"demo", "--out", Path("a")});
  const Result second = RunCli({"demo", "--out", Path("b")});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  ASSERT_EQ(second.code, kExitOk);
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(Path("a"))) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), Path("a"));
    EXPECT_EQ(Slurp(entry.path()), Slurp(fs::path(Path("b")) / rel)) << rel;
    ++files;
  }
  EXPECT_GT(files, 30u);
  for (const char* sub : {"example1", "example2", "counterexample"}) {
    EXPECT_TRUE(fs::is_directory(fs::path(Path("a")) / sub)) << sub;
  }
  EXPECT_NE(Slurp(fs::path(Path("a")) / "example1/correlated_invariance.txt")
                .find("verdict: VIOLATES"),
            std::string::npos);
  EXPECT_NE(Slurp(fs::path(Path("a")) / "counterexample/mw_invariance.txt")
                .find("verdict: VACUOUS"),
            std::string::npos);
}

}  // namespace
}  // namespace qgi::cli
