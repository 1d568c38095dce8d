// Copyright 2026 The Infocon Authors
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

#include "infocon/harness/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace infocon {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "infocon");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = CliMain(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, MiCheckExample) {
  const Outcome o = Invoke({"mi-check", "--d", "2", "--T", "2", "--delta", "0.1"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_THAT(o.out, HasSubstr("d=2 T=2 delta=0.1"));
  EXPECT_THAT(o.out, HasSubstr("bound=0.25 PASS"));
}

TEST(CliTest, SweepWritesCsv) {
  const std::string cfg = WriteTemp("sweep.toml", R"(id = "s"
kind = "rate_sweep"
algorithm = "rcd"
trials = 4
[instance]
family = "gc_p12"
delta = 0.1
B = 1.0
D = 2.0
p = 2.0
[schedule]
kind = "normalized_constant"
value = 1.0
[grid]
d = 4
T = [64, 128]
)");
  const std::string csv = ::testing::TempDir() + "/sweep.csv";
  const Outcome o = Invoke({"sweep", "--config", cfg, "--out", csv, "--jobs", "2",
                         "--no-wall-time", "--seed", "5"});
  ASSERT_EQ(o.code, kExitPass) << o.err;
  std::ifstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header,
            "experiment_id,trial,d,s,r,eps,T,algorithm,channel,final_error,"
            "bits_used,seed,wall_time_ms");
  EXPECT_THAT(row, StartsWith("s,0,4,,,,64,rcd,oblivious,"));
  EXPECT_THAT(row, ::testing::EndsWith(",5,"));
  EXPECT_THAT(o.out, HasSubstr("wrote 8 rows"));
}

TEST(CliTest, OverridesReachTheGrid) {
  const Outcome o = Invoke({"run", "--suite", "ldp_sgd"});
  EXPECT_EQ(o.code, kExitConfigError);  // --suite belongs to sweep
  const Outcome s = Invoke({"sweep", "--suite", "determinism", "--T", "64",
                         "--trials", "2", "--no-wall-time"});
  ASSERT_EQ(s.code, kExitPass) << s.err;
  // Header plus two rows on stdout, summary on stderr.
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 3);
  EXPECT_THAT(s.err, HasSubstr("T=64 trials=2"));
}

TEST(CliTest, ConfigErrorsExitTwoWithLine) {
  const std::string cfg = WriteTemp("bad.toml", "id = \"x\"\nkind = \"rate_sweep\"\ntrials = \"many\"\n");
  const Outcome o = Invoke({"run", "--config", cfg});
  EXPECT_EQ(o.code, kExitConfigError);
  EXPECT_THAT(o.err, HasSubstr("bad.toml:3: trials: expected an integer"));
  EXPECT_EQ(Invoke({}).code, kExitConfigError);
  EXPECT_EQ(Invoke({"launch"}).code, kExitConfigError);
  EXPECT_EQ(Invoke({"run"}).code, kExitConfigError);
  EXPECT_EQ(Invoke({"sweep", "--jobs", "0", "--suite", "ldp_sgd"}).code,
            kExitConfigError);
  EXPECT_EQ(Invoke({"mi-check", "--d", "5", "--delta", "0.1"}).code,
            kExitConfigError);
  EXPECT_EQ(Invoke({"--help"}).code, kExitPass);
}

TEST(CliTest, SeparationReportsVerdict) {
  const Outcome o = Invoke({"separation", "--d", "256", "--s", "16", "--T",
                         "16384", "--trials", "3", "--no-wall-time"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_THAT(o.out, HasSubstr(",acd,oblivious,"));
  EXPECT_THAT(o.out, HasSubstr(",nonadaptive,oblivious,"));
  EXPECT_THAT(o.err, HasSubstr("d=256 s=16 T=16384 acd="));
}

}  // namespace
}  // namespace infocon
