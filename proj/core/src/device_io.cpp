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


#include "condlo/device_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "condlo/errors.hpp"

namespace condlo {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

void check_object(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown field '" + key + "'");
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where, "expected a number");
  return v.get<double>();
}

std::vector<std::string> labels(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of mode labels");
  std::vector<std::string> out;
  for (const auto& l : v) {
    if (!l.is_string()) fail(where, "mode labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

Complex complex_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) fail(where, "expected a [re, im] pair");
  return {number(v[0], where), number(v[1], where)};
}

CMatrix matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty list of rows");
  const auto rows = v.size();
  if (!v[0].is_array()) fail(where, "expected rows of [re, im] pairs");
  const auto cols = v[0].size();
  CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!v[r].is_array() || v[r].size() != cols) fail(where, "rows have unequal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_pair(v[r][c], where);
    }
  }
  return m;
}

FockVector ket(const json& v, const ModeRegistry& reg, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of terms");
  FockVector::Terms terms;
  for (const auto& t : v) {
    check_object(t, {"occupations", "re", "im"}, where);
    const auto& occ = require(t, "occupations", where);
    if (!occ.is_array() || occ.size() != reg.mode_count()) {
      fail(where, "occupations must list " + std::to_string(reg.mode_count()) + " counts");
    }
    std::vector<std::uint32_t> counts;
    for (const auto& c : occ) {
      if (!c.is_number_unsigned()) fail(where, "occupation counts must be non-negative integers");
      counts.push_back(c.get<std::uint32_t>());
    }
    const Complex amp(number(require(t, "re", where), where), number(require(t, "im", where), where));
    if (!terms.emplace(OccupationVector(std::move(counts)), amp).second) {
      fail(where, "repeated occupation");
    }
  }
  return FockVector(reg, std::move(terms));
}

std::vector<FockVector> kets(const json& v, const ModeRegistry& reg, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list of kets");
  std::vector<FockVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ket(v[i], reg, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ModePartition partition(const json& v, const std::string& where) {
  check_object(v, {"computational", "ancilla"}, where);
  ModePartition p{labels(require(v, "computational", where), where),
                  labels(require(v, "ancilla", where), where)};
  std::set<std::string> seen;
  for (const auto* side : {&p.computational, &p.ancilla}) {
    for (const auto& l : *side) {
      if (!seen.insert(l).second) {
        throw ValidationError("partition", where + " lists mode '" + l + "' more than once");
      }
    }
  }
  return p;
}

ojson pair_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson matrix_json(const CMatrix& m) {
  ojson rows = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(pair_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson ket_json(const FockVector& v) {
  ojson terms = ojson::array();
  for (const auto& [occ, amp] : v.terms()) {
    ojson t;
    t["occupations"] = std::vector<std::uint32_t>(occ.counts().begin(), occ.counts().end());
    t["re"] = amp.real();
    t["im"] = amp.imag();
    terms.push_back(std::move(t));
  }
  return terms;
}

ojson kets_json(const std::vector<FockVector>& vs) {
  ojson out = ojson::array();
  for (const auto& v : vs) out.push_back(ket_json(v));
  return out;
}

ojson partition_json(const ModePartition& p) {
  ojson o;
  o["computational"] = p.computational;
  o["ancilla"] = p.ancilla;
  return o;
}

}  // namespace

ConditionalDevice parse_device(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("device file: ") + e.what());
  }
  check_object(doc,
               {"schema_version", "modes", "unitary", "input_partition", "output_partition",
                "ancilla", "ancilla_density", "ancilla_decomposition", "subspace_in",
                "subspace_out", "outcomes"},
               "device");

  const auto& version = require(doc, "schema_version", "device");
  if (!version.is_number_integer() || version.get<int>() != kDeviceSchemaVersion) {
    fail("schema_version", "unsupported version");
  }

  const auto& modes = require(doc, "modes", "device");
  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  if (modes.is_array()) {
    in_labels = labels(modes, "modes");
    out_labels = in_labels;
  } else {
    check_object(modes, {"input", "output"}, "modes");
    in_labels = labels(require(modes, "input", "modes"), "modes.input");
    out_labels = labels(require(modes, "output", "modes"), "modes.output");
  }
  ModeUnitary unitary(ModeRegistry(in_labels), ModeRegistry(out_labels),
                      matrix(require(doc, "unitary", "device"), "unitary"));

  const auto input = partition(require(doc, "input_partition", "device"), "input_partition");
  const auto output = partition(require(doc, "output_partition", "device"), "output_partition");
  const ModeRegistry comp_in(input.computational);
  const ModeRegistry anc_in(input.ancilla);
  const ModeRegistry comp_out(output.computational);
  const ModeRegistry anc_out(output.ancilla);

  const bool has_terms = doc.contains("ancilla");
  const bool has_density = doc.contains("ancilla_density");
  if (has_terms == has_density) {
    fail("device", "exactly one of 'ancilla' and 'ancilla_density' is required");
  }
  std::optional<AncillaDecomposition> sigma;
  if (has_terms) {
    auto source = AncillaDecomposition::Source::Explicit;
    if (doc.contains("ancilla_decomposition")) {
      const auto& s = doc["ancilla_decomposition"];
      if (s == "spectral") {
        source = AncillaDecomposition::Source::Spectral;
      } else if (s != "explicit") {
        fail("ancilla_decomposition", "expected \"explicit\" or \"spectral\"");
      }
    }
    const auto& list = doc["ancilla"];
    if (!list.is_array()) fail("ancilla", "expected a list of terms");
    std::vector<AncillaTerm> terms;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "ancilla[" + std::to_string(i) + "]";
      check_object(list[i], {"p", "ket"}, where);
      terms.push_back({number(require(list[i], "p", where), where),
                       ket(require(list[i], "ket", where), anc_in, where)});
    }
    sigma.emplace(std::move(terms), source);
  } else {
    if (doc.contains("ancilla_decomposition")) {
      fail("ancilla_decomposition", "not allowed with 'ancilla_density'");
    }
    const auto& d = doc["ancilla_density"];
    check_object(d, {"basis", "matrix"}, "ancilla_density");
    FockSubspaceBasis basis(anc_in,
                            kets(require(d, "basis", "ancilla_density"), anc_in,
                                 "ancilla_density.basis"));
    sigma = AncillaDecomposition::spectral(
        basis, matrix(require(d, "matrix", "ancilla_density"), "ancilla_density.matrix"));
  }

  FockSubspaceBasis subspace_in(comp_in,
                                kets(require(doc, "subspace_in", "device"), comp_in, "subspace_in"));
  std::optional<FockSubspaceBasis> subspace_out;
  if (doc.contains("subspace_out")) {
    subspace_out.emplace(comp_out, kets(doc["subspace_out"], comp_out, "subspace_out"));
  }

  const auto& outcome_list = require(doc, "outcomes", "device");
  if (!outcome_list.is_array()) fail("outcomes", "expected a list");
  std::vector<Outcome> outcomes;
  for (std::size_t i = 0; i < outcome_list.size(); ++i) {
    const std::string where = "outcomes[" + std::to_string(i) + "]";
    const auto& o = outcome_list[i];
    check_object(o, {"signature", "correction"}, where);
    Outcome out{{kets(require(o, "signature", where), anc_out, where + ".signature")},
                std::nullopt};
    if (o.contains("correction")) {
      const auto& c = o["correction"];
      if (c.is_string()) {
        if (c != "identity") fail(where + ".correction", "expected \"identity\" or a matrix");
      } else {
        out.correction = matrix(c, where + ".correction");
      }
    }
    outcomes.push_back(std::move(out));
  }

  return ConditionalDevice(std::move(unitary), input, output, std::move(*sigma),
                           std::move(subspace_in), std::move(subspace_out), std::move(outcomes));
}

ConditionalDevice load_device(const std::filesystem::path& path) {
  return parse_device(read_file(path));
}

std::string export_device(const ConditionalDevice& dev) {
  ojson doc;
  doc["schema_version"] = kDeviceSchemaVersion;
  const auto& in = dev.unitary().input_modes();
  const auto& out = dev.unitary().output_modes();
  if (in == out) {
    doc["modes"] = in.labels();
  } else {
    doc["modes"]["input"] = in.labels();
    doc["modes"]["output"] = out.labels();
  }
  doc["unitary"] = matrix_json(dev.unitary().matrix());
  doc["input_partition"] = partition_json(dev.input_partition());
  doc["output_partition"] = partition_json(dev.output_partition());
  if (dev.ancilla().source() == AncillaDecomposition::Source::Spectral) {
    doc["ancilla_decomposition"] = "spectral";
  }
  ojson ancilla = ojson::array();
  for (const auto& t : dev.ancilla().terms()) {
    ojson term;
    term["p"] = t.probability;
    term["ket"] = ket_json(t.state);
    ancilla.push_back(std::move(term));
  }
  doc["ancilla"] = std::move(ancilla);
  doc["subspace_in"] = kets_json(dev.subspace_in().vectors());
  if (dev.subspace_out()) doc["subspace_out"] = kets_json(dev.subspace_out()->vectors());
  ojson outcomes = ojson::array();
  for (const auto& o : dev.outcomes()) {
    ojson entry;
    entry["signature"] = kets_json(o.signature.kets);
    entry["correction"] = o.correction ? matrix_json(*o.correction) : ojson("identity");
    outcomes.push_back(std::move(entry));
  }
  doc["outcomes"] = std::move(outcomes);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw Error("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot replace '" + path.string() + "'");
  }
}

}  // namespace condlo
