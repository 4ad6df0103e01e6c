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


#include "cli.hpp"

#include <exception>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "condlo/analysis.hpp"
#include "condlo/catalog.hpp"
#include "condlo/device_io.hpp"
#include "condlo/errors.hpp"
#include "condlo/report.hpp"

namespace condlo::cli {

namespace {

const std::vector<std::string> kBuiltins = {"klm-ns", "klm-ns-extended", "cnot-pittman"};

ConditionalDevice builtin(const std::string& name) {
  if (name == "klm-ns") return build_klm_ns(false);
  if (name == "klm-ns-extended") return build_klm_ns(true);
  return build_cnot_pittman();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze conditional linear-optical devices for operational unitarity", "condlo"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a device file or builtin device");
  std::string device_path;
  std::string analyze_builtin;
  AnalysisOptions options;
  std::string format = "text";
  std::string analyze_out;
  auto* file_opt = analyze_cmd->add_option("device", device_path, "Device description file");
  auto* builtin_opt = analyze_cmd->add_option("--builtin", analyze_builtin, "Catalog device")
                          ->check(CLI::IsMember(kBuiltins));
  file_opt->excludes(builtin_opt);
  analyze_cmd->add_option("--tol", options.tolerance, "Verdict tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--t-eff", options.t_eff, "Operation time for H_eff = Q / t_eff")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--format", format, "Report format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--photon-cap", options.photon_cap, "Maximum photons per branch")
      ->capture_default_str()
      ->check(CLI::Range(1u, 64u));
  analyze_cmd->add_option("--out", analyze_out, "Write the report to this path");

  auto* export_cmd = app.add_subcommand("export", "Print a catalog device as a device file");
  std::string export_builtin;
  std::string export_out;
  export_cmd->add_option("--builtin", export_builtin, "Catalog device")
      ->required()
      ->check(CLI::IsMember(kBuiltins));
  export_cmd->add_option("--out", export_out, "Write the device file to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (export_cmd->parsed()) {
      emit(export_device(builtin(export_builtin)), export_out, out);
      return 0;
    }
    if (device_path.empty() && analyze_builtin.empty()) {
      err << "error: analyze needs a device file or --builtin\n";
      return 1;
    }
    const auto dev = analyze_builtin.empty() ? load_device(device_path) : builtin(analyze_builtin);
    const auto report = make_report(analyze(dev, options));
    emit(format == "json" ? render_json(report) : render_text(report), analyze_out, out);
    return exit_code(report);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace condlo::cli
