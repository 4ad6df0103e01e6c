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


#include "condlo/report.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>
#include <utility>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "condlo/errors.hpp"

namespace condlo {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

double clean(double x) { return std::abs(x) < 5e-7 ? 0.0 : x; }

std::string format_complex(Complex z) {
  return fmt::format("{:+.6f}{:+.6f}i", clean(z.real()), clean(z.imag()));
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("report: missing field '") + key + "'");
  return *it;
}

template <typename T>
T get(const json& obj, const char* key) {
  try {
    return field(obj, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: field '") + key + "': " + e.what());
  }
}

}  // namespace

ReportFile make_report(const AnalysisReport& a) {
  ReportFile r;
  r.overall_verdict = a.operationally_unitary;
  r.degenerate = a.degenerate;
  for (const auto& o : a.outcomes) {
    OutcomeRecord rec;
    rec.tau = o.verdict.tau;
    rec.test_pass = o.verdict.pass;
    rec.max_dev = o.verdict.max_deviation;
    rec.spread = o.verdict.spread;
    rec.eigenvalues.assign(o.test.eigenvalues.begin(), o.test.eigenvalues.end());
    r.per_outcome.push_back(std::move(rec));
  }
  r.total_tau = a.total_tau;
  if (a.proportionality) {
    r.proportionality = ProportionalityRecord{a.proportionality->pass,
                                              a.proportionality->relative_sigma2,
                                              a.proportionality->nonvanishing};
    r.w_matrix = a.proportionality->common.w;
  }
  r.completeness_dev = a.completeness_deviation;
  if (a.action) {
    r.q_eigenphases.emplace(a.action->eigenphases.begin(), a.action->eigenphases.end());
  }
  r.basis_source = a.basis_source == BasisSource::User ? "user" : "detected";
  r.sigma_decomposition =
      a.sigma_source == AncillaDecomposition::Source::Explicit ? "explicit" : "spectral";
  r.tolerance = a.options.tolerance;
  r.t_eff = a.options.t_eff;
  r.photon_cap = a.options.photon_cap;
  r.input_dimension = a.input_dimension;
  if (a.output_basis) r.output_dimension = a.output_basis->dimension();
  return r;
}

bool derive_verdict(const ReportFile& r) {
  if (r.degenerate || r.per_outcome.empty()) return false;
  for (const auto& o : r.per_outcome) {
    if (!o.test_pass) return false;
  }
  return r.proportionality && r.proportionality->pass && r.completeness_dev &&
         *r.completeness_dev <= r.tolerance;
}

int exit_code(const ReportFile& r) { return derive_verdict(r) ? 0 : 2; }

std::string render_json(const ReportFile& r) {
  ojson doc;
  doc["overall_verdict"] = r.overall_verdict ? "operationally_unitary" : "not_operationally_unitary";
  doc["degenerate"] = r.degenerate;
  ojson outcomes = ojson::array();
  for (const auto& o : r.per_outcome) {
    ojson e;
    e["tau"] = o.tau;
    e["test_pass"] = o.test_pass;
    e["max_dev"] = o.max_dev;
    e["spread"] = o.spread;
    e["eigenvalues"] = o.eigenvalues;
    outcomes.push_back(std::move(e));
  }
  doc["per_outcome"] = std::move(outcomes);
  doc["total_tau"] = r.total_tau;
  if (r.w_matrix) {
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < r.w_matrix->rows(); ++i) {
      ojson row = ojson::array();
      for (Eigen::Index j = 0; j < r.w_matrix->cols(); ++j) {
        const Complex z = (*r.w_matrix)(i, j);
        row.push_back(ojson::array({z.real(), z.imag()}));
      }
      rows.push_back(std::move(row));
    }
    doc["w_matrix"] = std::move(rows);
  } else {
    doc["w_matrix"] = nullptr;
  }
  doc["completeness_dev"] = r.completeness_dev ? ojson(*r.completeness_dev) : ojson(nullptr);
  if (r.proportionality) {
    doc["proportionality"] = {{"pass", r.proportionality->pass},
                              {"relative_sigma2", r.proportionality->relative_sigma2},
                              {"nonvanishing", r.proportionality->nonvanishing}};
  } else {
    doc["proportionality"] = nullptr;
  }
  doc["q_eigenphases"] = r.q_eigenphases ? ojson(*r.q_eigenphases) : ojson(nullptr);
  doc["basis_source"] = r.basis_source;
  doc["sigma_decomposition"] = r.sigma_decomposition;
  doc["tolerances"] = {{"verdict", r.tolerance}};
  doc["t_eff"] = r.t_eff;
  doc["photon_cap"] = r.photon_cap;
  doc["dimensions"] = {{"input", r.input_dimension},
                       {"output", r.output_dimension ? ojson(*r.output_dimension) : ojson(nullptr)}};
  return doc.dump(2) + "\n";
}

std::string render_text(const ReportFile& r) {
  std::string s;
  auto out = std::back_inserter(s);
  fmt::format_to(out, "verdict: {}{}\n",
                 r.overall_verdict ? "operationally unitary" : "not operationally unitary",
                 r.degenerate ? " (degenerate: no outcome heralds)" : "");
  fmt::format_to(out, "tolerance: {:g}  photon cap: {}  sigma: {}  output basis: {}\n", r.tolerance,
                 r.photon_cap, r.sigma_decomposition, r.basis_source);
  fmt::format_to(out, "outcomes: {}\n", r.per_outcome.size());
  for (std::size_t l = 0; l < r.per_outcome.size(); ++l) {
    const auto& o = r.per_outcome[l];
    fmt::format_to(out, "  L={:<3} tau={:.10f}  test={}  max_dev={:.3e}", l, o.tau,
                   o.test_pass ? "pass" : "FAIL", o.max_dev);
    if (!o.test_pass) {
      fmt::format_to(out, "  spread={:.10f}  eigenvalues=[", o.spread);
      for (std::size_t i = 0; i < o.eigenvalues.size(); ++i) {
        fmt::format_to(out, "{}{:.10f}", i ? ", " : "", o.eigenvalues[i]);
      }
      fmt::format_to(out, "]");
    }
    fmt::format_to(out, "\n");
  }
  fmt::format_to(out, "total tau: {:.10f}\n", r.total_tau);
  if (r.proportionality) {
    fmt::format_to(out, "proportionality: {}  sigma2/sigma1={:.3e}  members={}\n",
                   r.proportionality->pass ? "pass" : "FAIL", r.proportionality->relative_sigma2,
                   r.proportionality->nonvanishing);
  }
  if (r.w_matrix) {
    fmt::format_to(out, "w:\n");
    for (Eigen::Index i = 0; i < r.w_matrix->rows(); ++i) {
      fmt::format_to(out, " ");
      for (Eigen::Index j = 0; j < r.w_matrix->cols(); ++j) {
        fmt::format_to(out, " {}", format_complex((*r.w_matrix)(i, j)));
      }
      fmt::format_to(out, "\n");
    }
  }
  if (r.completeness_dev) fmt::format_to(out, "completeness deviation: {:.3e}\n", *r.completeness_dev);
  if (r.q_eigenphases) {
    fmt::format_to(out, "Q eigenphases:");
    for (double q : *r.q_eigenphases) fmt::format_to(out, " {:.6f}", clean(q));
    fmt::format_to(out, "  (t_eff={:g})\n", r.t_eff);
  }
  return s;
}

ReportFile parse_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("report: expected an object");

  ReportFile r;
  const auto verdict = get<std::string>(doc, "overall_verdict");
  if (verdict != "operationally_unitary" && verdict != "not_operationally_unitary") {
    throw ParseError("report: unknown overall_verdict '" + verdict + "'");
  }
  r.overall_verdict = verdict == "operationally_unitary";
  r.degenerate = get<bool>(doc, "degenerate");
  for (const auto& e : field(doc, "per_outcome")) {
    OutcomeRecord o;
    o.tau = get<double>(e, "tau");
    o.test_pass = get<bool>(e, "test_pass");
    o.max_dev = get<double>(e, "max_dev");
    o.spread = get<double>(e, "spread");
    o.eigenvalues = get<std::vector<double>>(e, "eigenvalues");
    r.per_outcome.push_back(std::move(o));
  }
  r.total_tau = get<double>(doc, "total_tau");
  const auto& w = field(doc, "w_matrix");
  if (!w.is_null()) {
    const auto rows = w.size();
    const auto cols = rows ? w[0].size() : 0;
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      if (w[i].size() != cols) throw ParseError("report: ragged w_matrix");
      for (std::size_t j = 0; j < cols; ++j) {
        const auto pair = w[i][j].get<std::vector<double>>();
        if (pair.size() != 2) throw ParseError("report: w_matrix entries must be [re, im]");
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {pair[0], pair[1]};
      }
    }
    r.w_matrix = std::move(m);
  }
  if (const auto& c = field(doc, "completeness_dev"); !c.is_null()) r.completeness_dev = c.get<double>();
  if (const auto& p = field(doc, "proportionality"); !p.is_null()) {
    r.proportionality = ProportionalityRecord{get<bool>(p, "pass"), get<double>(p, "relative_sigma2"),
                                              get<std::size_t>(p, "nonvanishing")};
  }
  if (const auto& q = field(doc, "q_eigenphases"); !q.is_null()) {
    r.q_eigenphases = q.get<std::vector<double>>();
  }
  r.basis_source = get<std::string>(doc, "basis_source");
  r.sigma_decomposition = get<std::string>(doc, "sigma_decomposition");
  r.tolerance = get<double>(field(doc, "tolerances"), "verdict");
  r.t_eff = get<double>(doc, "t_eff");
  r.photon_cap = get<unsigned>(doc, "photon_cap");
  const auto& dims = field(doc, "dimensions");
  r.input_dimension = get<std::size_t>(dims, "input");
  if (const auto& o = field(dims, "output"); !o.is_null()) r.output_dimension = o.get<std::size_t>();

  double sum = 0.0;
  bool heralds = false;
  for (const auto& o : r.per_outcome) {
    sum += o.tau;
    heralds = heralds || o.tau > r.tolerance;
  }
  if (std::abs(sum - r.total_tau) > 1e-12 * std::max(1.0, std::abs(r.total_tau))) {
    throw ValidationError("report", "total_tau does not match the per-outcome values");
  }
  if (r.degenerate == heralds) {
    throw ValidationError("report", "degenerate flag does not match the per-outcome values");
  }
  if (derive_verdict(r) != r.overall_verdict) {
    throw ValidationError("report", "overall_verdict does not follow from the recorded checks");
  }
  return r;
}

}  // namespace condlo
