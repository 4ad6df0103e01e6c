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

#include "condlo/catalog.hpp"

#include <array>
#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>

namespace condlo {

namespace {

std::vector<OccupationVector> number_states(unsigned max_photons) {
  std::vector<OccupationVector> out;
  for (std::uint32_t n = 0; n <= max_photons; ++n) out.emplace_back(std::vector<std::uint32_t>{n});
  return out;
}

// Occupation with one photon in each listed mode.
OccupationVector photons_in(const ModeRegistry& reg, std::initializer_list<const char*> modes) {
  auto occ = OccupationVector::vacuum(reg.mode_count());
  for (const char* m : modes) {
    const auto i = reg.index_of(m);
    occ = occ.with_count(i, occ[i] + 1);
  }
  return occ;
}

const std::array<const char*, 4> kDetectedPorts = {"p", "q", "n", "m"};

}  // namespace

ConditionalDevice build_klm_ns(bool extended) {
  const double r2 = std::sqrt(2.0);
  const double a = std::pow(2.0, -0.25);
  const double b = std::sqrt(3.0 / r2 - 2.0);
  CMatrix u(3, 3);
  // clang-format off
  u << 1.0 - r2, a,              b,
       a,        0.5,            0.5 - 1.0 / r2,
       b,        0.5 - 1.0 / r2, r2 - 0.5;
  // clang-format on

  ModeRegistry in({"1", "2", "3"});
  ModeRegistry out({"a", "b", "c"});
  ModePartition input{{"1"}, {"2", "3"}};
  ModePartition output{{"a"}, {"b", "c"}};

  ModeRegistry anc_in({"2", "3"});
  ModeRegistry anc_out({"b", "c"});
  AncillaDecomposition sigma({{1.0, FockVector::basis(anc_in, photons_in(anc_in, {"2"}))}});
  Outcome herald{{{FockVector::basis(anc_out, photons_in(anc_out, {"b"}))}}, std::nullopt};

  const auto levels = number_states(extended ? 3 : 2);
  return ConditionalDevice(ModeUnitary(in, out, u), input, output, sigma,
                           FockSubspaceBasis::from_occupations(ModeRegistry({"1"}), levels),
                           FockSubspaceBasis::from_occupations(ModeRegistry({"a"}), levels),
                           {herald});
}

ConditionalDevice build_cnot_pittman() {
  ModeRegistry in({"H_a", "V_a", "H_b", "V_b", "H_1", "V_1", "H_2", "V_2", "H_3", "V_3", "H_4",
                   "V_4"});
  ModeRegistry out({"H_5", "V_5", "H_6", "V_6", "H_p", "V_p", "H_q", "V_q", "H_n", "V_n", "H_m",
                    "V_m"});
  ModePartition input{{"H_a", "V_a", "H_b", "V_b"},
                      {"H_1", "V_1", "H_2", "V_2", "H_3", "V_3", "H_4", "V_4"}};
  ModePartition output{{"H_5", "V_5", "H_6", "V_6"},
                       {"H_p", "V_p", "H_q", "V_q", "H_n", "V_n", "H_m", "V_m"}};

  // Single-photon routing through the polarizing beam splitters; the listed
  // amplitude is the conjugate of the stored matrix entry.
  struct Route {
    const char* from;
    const char* to;
    Complex amplitude;
  };
  const Complex minus_i(0.0, -1.0);
  const std::array<Route, 12> routes = {{
      {"H_1", "H_p", 1.0}, {"V_1", "V_q", minus_i},
      {"H_2", "H_5", 1.0}, {"V_2", "V_5", 1.0},
      {"H_3", "H_6", 1.0}, {"V_3", "V_6", 1.0},
      {"H_4", "H_m", 1.0}, {"V_4", "V_n", minus_i},
      {"H_a", "H_q", 1.0}, {"V_a", "V_p", minus_i},
      {"H_b", "H_n", 1.0}, {"V_b", "V_m", minus_i},
  }};
  CMatrix u = CMatrix::Zero(12, 12);
  for (const auto& r : routes) u(in.index_of(r.from), out.index_of(r.to)) = std::conj(r.amplitude);

  ModeRegistry anc_in(input.ancilla);
  FockVector chi(anc_in);
  chi.accumulate(photons_in(anc_in, {"H_1", "H_4", "H_2", "H_3"}), 0.5);
  chi.accumulate(photons_in(anc_in, {"H_1", "V_4", "H_2", "V_3"}), 0.5);
  chi.accumulate(photons_in(anc_in, {"V_1", "H_4", "V_2", "V_3"}), 0.5);
  chi.accumulate(photons_in(anc_in, {"V_1", "V_4", "V_2", "H_3"}), 0.5);
  AncillaDecomposition sigma({{1.0, chi}});

  ModeRegistry anc_out(output.ancilla);
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Outcome> outcomes;
  for (unsigned l = 0; l < 16; ++l) {
    // sign[x] = +1 for |F_x>, -1 for |S_x>; port p is the most significant bit.
    std::array<double, 4> sign{};
    std::vector<FockVector> ports;
    for (std::size_t x = 0; x < 4; ++x) {
      sign[x] = ((l >> (3 - x)) & 1u) ? -1.0 : 1.0;
      const std::string port = kDetectedPorts[x];
      ModeRegistry pair({"H_" + port, "V_" + port});
      FockVector v(pair);
      v.accumulate(OccupationVector(std::vector<std::uint32_t>{1, 0}), h);
      v.accumulate(OccupationVector(std::vector<std::uint32_t>{0, 1}), sign[x] * h);
      ports.push_back(std::move(v));
    }
    const double sp = sign[0], sq = sign[1], sn = sign[2], sm = sign[3];
    // Logical output order 00, 01, 10, 11.
    CVector diag(4);
    diag << 1.0, -sn * sm, sp * sq * sn * sm, -sp * sq;
    outcomes.push_back({{{embed_product(anc_out, ports)}}, CMatrix(diag.asDiagonal())});
  }

  ModeRegistry comp_in(input.computational);
  ModeRegistry comp_out(output.computational);
  auto logical = [](const ModeRegistry& reg, const std::string& x, const std::string& y) {
    return std::vector<OccupationVector>{
        photons_in(reg, {("H_" + x).c_str(), ("H_" + y).c_str()}),
        photons_in(reg, {("H_" + x).c_str(), ("V_" + y).c_str()}),
        photons_in(reg, {("V_" + x).c_str(), ("H_" + y).c_str()}),
        photons_in(reg, {("V_" + x).c_str(), ("V_" + y).c_str()}),
    };
  };
  return ConditionalDevice(ModeUnitary(in, out, u), input, output, sigma,
                           FockSubspaceBasis::from_occupations(comp_in, logical(comp_in, "a", "b")),
                           FockSubspaceBasis::from_occupations(comp_out, logical(comp_out, "5", "6")),
                           std::move(outcomes));
}

DensityOperator special_state_S() {
  ModeRegistry comp_in({"H_a", "V_a", "H_b", "V_b"});
  return DensityOperator::pure(
      FockVector::basis(comp_in, photons_in(comp_in, {"H_a", "H_b", "H_b"})));
}

}  // namespace condlo
