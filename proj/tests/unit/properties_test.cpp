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


#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "condlo/analysis.hpp"
#include "condlo/catalog.hpp"
#include "condlo/cpmap.hpp"
#include "random_states.hpp"

namespace condlo {
namespace {

struct Named {
  std::string name;
  ConditionalDevice device;
};

std::vector<Named> catalog() {
  return {{"klm-ns", build_klm_ns(false)},
          {"klm-ns-extended", build_klm_ns(true)},
          {"cnot-pittman", build_cnot_pittman()}};
}

// Fock basis on the output computational modes wide enough for any output.
FockSubspaceBasis output_frame(const ConditionalDevice& dev, unsigned max_photons) {
  std::vector<OccupationVector> levels;
  for (unsigned n = 0; n <= max_photons; ++n) {
    for (auto& o : enumerate_sector(dev.computational_out(), n)) levels.push_back(std::move(o));
  }
  return FockSubspaceBasis::from_occupations(dev.computational_out(), levels);
}

TEST(Properties, ConditionalOutputPreservesTrace) {
  testing::Rng rng(31);
  for (const auto& [name, dev] : catalog()) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto rho = testing::random_mixed_state(dev.subspace_in(), rng);
      const auto out = conditional_output(dev, 0, rho);
      EXPECT_NEAR(out.trace(), 1.0, 1e-10) << name;
    }
  }
}

TEST(Properties, ConvexityOfConditionalMap) {
  testing::Rng rng(32);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (const auto& [name, dev] : catalog()) {
    const auto frame = output_frame(dev, 3);
    for (int trial = 0; trial < 3; ++trial) {
      const auto a = testing::random_mixed_state(dev.subspace_in(), rng);
      const auto b = testing::random_pure_state(dev.subspace_in(), rng);
      const double x = unit(rng);
      const DensityOperator mix{dev.subspace_in(), x * a.matrix + (1 - x) * b.matrix};
      const double da = success_probability(dev, 0, a);
      const double db = success_probability(dev, 0, b);
      const CMatrix lhs = conditional_output(dev, 0, mix).represent(frame);
      const CMatrix rhs = (x * da * conditional_output(dev, 0, a).represent(frame) +
                           (1 - x) * db * conditional_output(dev, 0, b).represent(frame)) /
                          (x * da + (1 - x) * db);
      EXPECT_LT(max_abs(lhs - rhs), 1e-9) << name;
    }
  }
}

TEST(Properties, DProbeAgreesWithTestVerdict) {
  for (const auto& [name, dev] : catalog()) {
    for (std::size_t l = 0; l < dev.outcomes().size(); ++l) {
      const bool pass = test_condition(test_operator(dev, l)).pass;
      const double spread = randomized_d_probe(dev, l, 8);
      EXPECT_EQ(spread <= kDefaultVerdictTolerance, pass) << name << " L=" << l;
    }
  }
}

TEST(Properties, PassingDevicesActAsConjugation) {
  testing::Rng rng(33);
  for (const auto& [name, dev] : catalog()) {
    const auto report = analyze(dev);
    if (!report.operationally_unitary) continue;
    const CMatrix& w = report.proportionality->common.w;
    const auto& out_basis = *report.output_basis;
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = trial % 2 ? testing::random_mixed_state(dev.subspace_in(), rng)
                                 : testing::random_pure_state(dev.subspace_in(), rng);
      const std::size_t l = static_cast<std::size_t>(trial) % dev.outcomes().size();
      const auto out = conditional_output(dev, l, rho);
      const CMatrix in_basis = out.represent(out_basis);
      EXPECT_LT(max_abs(in_basis - w * rho.matrix * w.adjoint()), 1e-9) << name;
      if (trial % 2 == 0) {
        EXPECT_GE((in_basis * in_basis).trace().real(), 1.0 - 1e-9) << name;
      }
    }
  }
}

TEST(Properties, TauMatchesSuccessProbability) {
  testing::Rng rng(34);
  for (const auto& [name, dev] : catalog()) {
    const auto report = analyze(dev);
    for (const auto& o : report.outcomes) {
      if (!o.verdict.pass) continue;
      for (int trial = 0; trial < 10; ++trial) {
        const auto rho = testing::random_pure_state(dev.subspace_in(), rng);
        EXPECT_NEAR(success_probability(dev, o.index, rho), o.verdict.tau, 1e-10) << name;
      }
    }
  }
}

TEST(Properties, EffectiveActionReconstructsW) {
  for (const auto& [name, dev] : catalog()) {
    const auto report = analyze(dev);
    if (!report.action) continue;
    EXPECT_LT(report.action->reconstruction_deviation, 1e-9) << name;
    for (double q : report.action->eigenphases) {
      EXPECT_GT(q, -std::numbers::pi);
      EXPECT_LE(q, std::numbers::pi);
    }
  }
}

TEST(Properties, FeedForwardMakesOutputsOutcomeIndependent) {
  const auto dev = build_cnot_pittman();
  testing::Rng rng(35);
  const auto rho = testing::random_mixed_state(dev.subspace_in(), rng);
  const CMatrix reference = conditional_output(dev, 0, rho).represent(*dev.subspace_out());
  for (std::size_t l = 1; l < 16; ++l) {
    const CMatrix out = conditional_output(dev, l, rho).represent(*dev.subspace_out());
    EXPECT_LT(max_abs(out - reference), 1e-9) << "L=" << l;
  }
}

}  // namespace
}  // namespace condlo
