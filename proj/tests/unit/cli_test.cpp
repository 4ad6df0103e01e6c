// Copyright 2026 The condlo Authors
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


#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "condlo/catalog.hpp"
#include "condlo/device_io.hpp"
#include "condlo/report.hpp"

namespace {

using json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "condlo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = condlo::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kCatalog = CONDLO_CATALOG_DIR;

TEST(Cli, BuiltinKlmIsUnitary) {
  const auto r = run({"analyze", "--builtin", "klm-ns", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["total_tau"].get<double>(), 0.25, 1e-10);
  EXPECT_NEAR(doc["w_matrix"][2][2][0].get<double>(), -1.0, 1e-9);
}

TEST(Cli, BuiltinExtendedKlmFails) {
  const auto r = run({"analyze", "--builtin", "klm-ns-extended", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["per_outcome"][0]["eigenvalues"][0].get<double>(), 0.10786, 1e-5);
}

TEST(Cli, BuiltinCnotIsUnitary) {
  const auto r = run({"analyze", "--builtin", "cnot-pittman", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_NEAR(doc["total_tau"].get<double>(), 0.25, 1e-10);
  ASSERT_EQ(doc["per_outcome"].size(), 16u);
  for (const auto& o : doc["per_outcome"]) EXPECT_NEAR(o["tau"].get<double>(), 0.015625, 1e-12);
}

TEST(Cli, AnalyzesCatalogFileAndWritesReport) {
  const auto path = std::filesystem::temp_directory_path() / "condlo_cli_report.json";
  const auto r = run({"analyze", kCatalog + "/klm-ns.json", "--format", "json", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const auto report = condlo::parse_report(condlo::read_file(path));
  EXPECT_EQ(condlo::exit_code(report), 0);
  std::filesystem::remove(path);
}

TEST(Cli, OptionsReachTheReport) {
  const auto r = run({"analyze", "--builtin", "klm-ns", "--format", "json", "--tol", "1e-6",
                      "--t-eff", "2.5", "--photon-cap", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["tolerances"]["verdict"].get<double>(), 1e-6);
  EXPECT_EQ(doc["t_eff"].get<double>(), 2.5);
  EXPECT_EQ(doc["photon_cap"].get<unsigned>(), 5u);
}

TEST(Cli, ErrorsExitWithOne) {
  EXPECT_EQ(run({"analyze", "/nonexistent/device.json"}).code, 1);
  EXPECT_EQ(run({"analyze", "--builtin", "nope"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"analyze", "--builtin", "klm-ns", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"analyze", "--builtin", "klm-ns", "--photon-cap", "1"}).code, 1);
  EXPECT_EQ(run({}).code, 1);

  const auto bad = std::filesystem::temp_directory_path() / "condlo_cli_bad.json";
  auto doc = json::parse(condlo::read_file(kCatalog + "/klm-ns.json"));
  doc["ancilla"][0]["p"] = 0.9;
  condlo::write_file_atomic(bad, doc.dump());
  const auto r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("AncillaDecomposition"), std::string::npos);
  std::filesystem::remove(bad);
}

TEST(Cli, HelpExitsWithZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Cli, ExportMatchesCatalog) {
  const auto r = run({"export", "--builtin", "cnot-pittman"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, condlo::read_file(kCatalog + "/cnot-pittman.json"));
}

}  // namespace
