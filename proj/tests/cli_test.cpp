// Copyright 2026 The gaussbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussbell/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gaussbell/detection.hpp"
#include "gaussbell/document.hpp"
#include "json.hpp"

namespace gaussbell::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args,
                const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gaussbell_cli_test_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  io::CmDocument read(const std::string& name) const {
    std::ifstream file(path(name));
    return io::read_document(file);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenVacuum) {
  ASSERT_EQ(run_cli({"gen", "vacuum", "2", "-o", path("v.json")}).code, kSuccess);
  const io::CmDocument doc = read("v.json");
  EXPECT_EQ(doc.n_modes, 2u);
  EXPECT_EQ(doc.matrix, Mat(Mat::Identity(4, 4)));
  EXPECT_EQ(doc.metadata.at("source"), "vacuum");
}

TEST_F(CliTest, GenEprMatchesLibrary) {
  ASSERT_EQ(run_cli({"gen", "epr", "2", "-o", path("e.json")}).code, kSuccess);
  EXPECT_EQ(read("e.json").cm(), epr_cm(2.0));
}

TEST_F(CliTest, GenRandomValidates) {
  ASSERT_EQ(run_cli({"gen", "random", "3", "7", "-o", path("r.json")}).code,
            kSuccess);
  EXPECT_EQ(read("r.json").cm(), random_cm(3, 7));
  EXPECT_EQ(run_cli({"validate", path("r.json")}).code, kSuccess);
}

TEST_F(CliTest, GenToStdout) {
  const Outcome o = run_cli({"gen", "epr", "1.5"});
  ASSERT_EQ(o.code, kSuccess);
  EXPECT_EQ(io::parse_document(o.out).cm(), epr_cm(1.5));
}

TEST_F(CliTest, GenBadParameters) {
  EXPECT_EQ(run_cli({"gen", "epr", "0.5"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "vacuum", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "random", "0", "1"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen", "epr", "abc"}).code, kUsageError);
  EXPECT_EQ(run_cli({"gen"}).code, kUsageError);
  EXPECT_EQ(run_cli({}).code, kUsageError);
}

TEST_F(CliTest, ValidateExitCodes) {
  write("vac.json", io::to_text(io::CmDocument::from(vacuum(1))));
  write("sub.json", R"({"n_modes": 1, "matrix": [[0.5, 0], [0, 0.5]]})");
  write("bad.json", "{ nope");
  write("odd.json", R"({"n_modes": 1, "matrix": [[1, 0, 0], [0, 1, 0]]})");
  const Outcome ok = run_cli({"validate", path("vac.json")});
  EXPECT_EQ(ok.code, kSuccess);
  EXPECT_NE(ok.out.find("bona_fide: yes"), std::string::npos);
  EXPECT_NE(ok.out.find("symmetry_defect"), std::string::npos);
  EXPECT_NE(ok.out.find("min_uncertainty_eigenvalue"), std::string::npos);
  const Outcome sub = run_cli({"validate", path("sub.json")});
  EXPECT_EQ(sub.code, kDomainFailure);
  EXPECT_NE(sub.out.find("bona_fide: no"), std::string::npos);
  EXPECT_EQ(run_cli({"validate", path("bad.json")}).code, kUsageError);
  EXPECT_EQ(run_cli({"validate", path("odd.json")}).code, kUsageError);
  EXPECT_EQ(run_cli({"validate", path("missing.json")}).code, kUsageError);
}

TEST_F(CliTest, ValidateFromStdin) {
  const Outcome o =
      run_cli({"validate", "-"}, io::to_text(io::CmDocument::from(epr_cm(2.0))));
  EXPECT_EQ(o.code, kSuccess);
}

TEST_F(CliTest, DetectHomodyneOnEpr) {
  write("epr.json", io::to_text(io::CmDocument::from(epr_cm(2.0))));
  ASSERT_EQ(run_cli({"detect", path("epr.json"), "--kind", "homodyne-q",
                     "--eta", "1", "-o", path("out.json")})
                .code,
            kSuccess);
  const io::CmDocument out = read("out.json");
  EXPECT_EQ(out.n_modes, 1u);
  EXPECT_LT(max_abs(out.matrix - Mat2{{0.5, 0.0}, {0.0, 2.0}}), 1e-12);
  EXPECT_EQ(out.metadata.at("detection"), "homodyne-q");
}

TEST_F(CliTest, DetectBellUncorrelatedKeepsA) {
  const CovarianceMatrix a0 = random_cm(2, 21);
  write("in.json", io::to_text(io::CmDocument::from(
                       direct_sum(a0, random_cm(2, 22)))));
  ASSERT_EQ(run_cli({"detect", path("in.json"), "--kind", "bell",
                     "--transmissivity", "0.3", "-o", path("out.json")})
                .code,
            kSuccess);
  EXPECT_EQ(read("out.json").matrix, a0.matrix());
  EXPECT_EQ(read("out.json").metadata.at("transmissivity"), "0.3");
}

TEST_F(CliTest, DetectWithTraceAgreesWithOracle) {
  ASSERT_EQ(run_cli({"gen", "random", "3", "5", "-o", path("r.json")}).code,
            kSuccess);
  const Outcome o = run_cli({"detect", path("r.json"), "--kind", "bell",
                             "--transmissivity", "0.7", "--eta", "0.9",
                             "--eta-prime", "0.8", "--trace", path("t.json"),
                             "-o", path("out.json")});
  ASSERT_EQ(o.code, kSuccess) << o.err;
  std::ifstream trace_file(path("t.json"));
  const auto trace = nlohmann::json::parse(trace_file);
  EXPECT_EQ(trace["steps"].size(), 6u);
  EXPECT_LE(trace["max_relative_deviation"].get<double>(), kTraceTolerance);
  EXPECT_EQ(run_cli({"validate", path("out.json")}).code, kSuccess);
  const CovarianceMatrix expected =
      bell_like(random_cm(3, 5), Transmissivity(0.7), Efficiency(0.9),
                Efficiency(0.8));
  EXPECT_EQ(read("out.json").cm(), expected);
}

TEST_F(CliTest, TraceCoversEveryKind) {
  ASSERT_EQ(run_cli({"gen", "random", "3", "6", "-o", path("r.json")}).code,
            kSuccess);
  for (const char* kind :
       {"homodyne-q", "homodyne-p", "bell", "standard-bell", "heterodyne"}) {
    const Outcome o =
        run_cli({"detect", path("r.json"), "--kind", kind, "--eta", "0.6",
                 "--trace", path("t.json"), "-o", path("out.json")});
    EXPECT_EQ(o.code, kSuccess) << kind << ": " << o.err;
  }
}

TEST_F(CliTest, CorruptedEntryFailsTraceCheck) {
  ASSERT_EQ(run_cli({"gen", "random", "3", "5", "-o", path("r.json")}).code,
            kSuccess);
  const Outcome o = run_cli({"detect", path("r.json"), "--kind", "bell",
                             "--trace", path("t.json"), "--corrupt-entry", "0",
                             "1", "-o", path("out.json")});
  EXPECT_EQ(o.code, kDomainFailure);
  EXPECT_NE(o.err.find("disagrees"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("out.json")));
}

TEST_F(CliTest, DetectFlagConsistency) {
  write("r.json", io::to_text(io::CmDocument::from(random_cm(3, 1))));
  EXPECT_EQ(run_cli({"detect", path("r.json"), "--kind", "heterodyne",
                     "--transmissivity", "0.3"})
                .code,
            kUsageError);
  EXPECT_EQ(run_cli({"detect", path("r.json"), "--kind", "homodyne-p",
                     "--eta-prime", "0.3"})
                .code,
            kUsageError);
  EXPECT_EQ(run_cli({"detect", path("r.json"), "--kind", "teleport"}).code,
            kUsageError);
  EXPECT_EQ(run_cli({"detect", path("r.json")}).code, kUsageError);
  EXPECT_EQ(run_cli({"detect", path("r.json"), "--kind", "bell",
                     "--corrupt-entry", "0", "0"})
                .code,
            kUsageError);
}

TEST_F(CliTest, DetectDomainFailures) {
  write("r.json", io::to_text(io::CmDocument::from(random_cm(3, 1))));
  EXPECT_EQ(
      run_cli({"detect", path("r.json"), "--kind", "bell", "--eta", "0"}).code,
      kDomainFailure);
  EXPECT_EQ(run_cli({"detect", path("r.json"), "--kind", "bell",
                     "--transmissivity", "1.5"})
                .code,
            kDomainFailure);
  write("degenerate.json", R"({"n_modes": 3, "matrix": [
      [1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,0,0,0,0],
      [0,0,0,1,0,0],[0,0,0,0,0,0],[0,0,0,0,0,1]]})");
  const Outcome o =
      run_cli({"detect", path("degenerate.json"), "--kind", "standard-bell"});
  EXPECT_EQ(o.code, kDomainFailure);
  EXPECT_NE(o.err.find("gamma1"), std::string::npos);
  write("epr.json", io::to_text(io::CmDocument::from(epr_cm(2.0))));
  EXPECT_EQ(run_cli({"detect", path("epr.json"), "--kind", "bell"}).code,
            kDomainFailure);
}

}  // namespace
}  // namespace gaussbell::cli
