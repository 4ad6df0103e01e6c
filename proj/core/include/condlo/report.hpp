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


#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "condlo/analysis.hpp"
#include "condlo/linalg.hpp"

namespace condlo {

struct OutcomeRecord {
  double tau = 0.0;
  bool test_pass = false;
  double max_dev = 0.0;
  double spread = 0.0;
  std::vector<double> eigenvalues;
};

struct ProportionalityRecord {
  bool pass = false;
  double relative_sigma2 = 0.0;
  std::size_t nonvanishing = 0;
};

/// Serializable summary of an analysis run.
struct ReportFile {
  bool overall_verdict = false;
  bool degenerate = false;
  std::vector<OutcomeRecord> per_outcome;
  double total_tau = 0.0;
  std::optional<CMatrix> w_matrix;
  std::optional<double> completeness_dev;
  std::optional<ProportionalityRecord> proportionality;
  std::optional<std::vector<double>> q_eigenphases;
  std::string basis_source = "user";
  std::string sigma_decomposition = "explicit";
  double tolerance = kDefaultVerdictTolerance;
  double t_eff = 1.0;
  unsigned photon_cap = kDefaultPhotonCap;
  std::size_t input_dimension = 0;
  std::optional<std::size_t> output_dimension;
};

ReportFile make_report(const AnalysisReport& analysis);

/// Recomputes the verdict from the per-outcome, proportionality and
/// completeness fields alone.
bool derive_verdict(const ReportFile& report);

/// 0 when operationally unitary, 2 otherwise.
int exit_code(const ReportFile& report);

std::string render_json(const ReportFile& report);
std::string render_text(const ReportFile& report);

/// Throws ParseError on malformed input and ValidationError("report") when
/// the totals or verdict disagree with the per-outcome fields.
ReportFile parse_report(std::string_view text);

}  // namespace condlo
