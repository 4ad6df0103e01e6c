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
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "condlo/analysis.hpp"
#include "condlo/catalog.hpp"
#include "condlo/errors.hpp"

namespace condlo {
namespace {

OccupationVector occ(std::vector<std::uint32_t> c) { return OccupationVector(std::move(c)); }

ConditionalDevice without_corrections(const ConditionalDevice& dev) {
  auto outcomes = dev.outcomes();
  for (auto& o : outcomes) o.correction.reset();
  return dev.with_outcomes(std::move(outcomes));
}

TEST(TestOperator, KlmIsQuarterIdentity) {
  const auto t = test_operator(build_klm_ns(false), 0);
  EXPECT_LT(max_abs(t.matrix - 0.25 * CMatrix::Identity(3, 3)), 1e-10);
  const auto v = test_condition(t);
  EXPECT_TRUE(v.pass);
  EXPECT_NEAR(v.tau, 0.25, 1e-12);
  EXPECT_FALSE(v.degenerate);
}

TEST(TestOperator, ExtendedKlmBreaksProportionality) {
  const auto t = test_operator(build_klm_ns(true), 0);
  const double fourth = std::pow(2.0 * std::sqrt(2.0) - 2.5, 2);
  EXPECT_NEAR(t.matrix(3, 3).real(), fourth, 1e-12);
  EXPECT_NEAR(t.eigenvalues[0], fourth, 1e-12);
  const auto v = test_condition(t);
  EXPECT_FALSE(v.pass);
  EXPECT_NEAR(v.spread, 0.25 - fourth, 1e-12);
}

TEST(TestOperator, CnotOutcomesAreUniform) {
  const auto dev = build_cnot_pittman();
  for (std::size_t l = 0; l < dev.outcomes().size(); ++l) {
    const auto t = test_operator(dev, l);
    EXPECT_LT(max_abs(t.matrix - CMatrix::Identity(4, 4) / 64.0), 1e-10) << "L=" << l;
  }
}

TEST(TestCondition, ZeroMatrixIsDegenerate) {
  const TestOperator zero{CMatrix::Zero(3, 3), RVector::Zero(3)};
  const auto v = test_condition(zero);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.tau, 0.0);
  EXPECT_TRUE(v.degenerate);
}

TEST(TestCondition, DiagonalNearMiss) {
  RVector e(4);
  e << 0.10786, 0.25, 0.25, 0.25;
  const TestOperator t{CMatrix(e.cast<Complex>().asDiagonal()), e};
  const auto v = test_condition(t);
  EXPECT_FALSE(v.pass);
  EXPECT_NEAR(v.spread, 0.14214, 1e-12);
}

TEST(WMatrices, KlmSingleMemberIsSignFlip) {
  const auto dev = build_klm_ns(false);
  const auto fam = w_matrices(dev, *dev.subspace_out());
  ASSERT_EQ(fam.members.size(), 1u);
  CMatrix expected = CMatrix::Identity(3, 3);
  expected(2, 2) = -1.0;
  EXPECT_LT(max_abs(fam.members[0].matrix - expected), 1e-9);
}

TEST(WMatrices, AnnihilatingSignatureIsDegenerate) {
  const auto dev = build_klm_ns(false);
  ModeRegistry anc({"b", "c"});
  const auto silent =
      dev.with_outcomes({Outcome{{{FockVector::basis(anc, occ({0, 4}))}}, std::nullopt}});
  EXPECT_THROW(w_matrices(silent, *silent.subspace_out()), DegenerateDeviceError);
  EXPECT_THROW(detect_output_basis(silent), DegenerateDeviceError);
  const auto report = analyze(silent);
  EXPECT_TRUE(report.degenerate);
  EXPECT_FALSE(report.operationally_unitary);
}

TEST(Proportionality, CnotNeedsFeedForward) {
  const auto dev = build_cnot_pittman();
  const auto corrected = proportionality_check(w_matrices(dev, *dev.subspace_out()));
  EXPECT_TRUE(corrected.pass);
  EXPECT_EQ(corrected.nonvanishing, 16u);
  const auto bare = without_corrections(dev);
  const auto uncorrected = proportionality_check(w_matrices(bare, *bare.subspace_out()));
  EXPECT_FALSE(uncorrected.pass);
  EXPECT_GT(uncorrected.relative_sigma2, 0.1);
}

TEST(Proportionality, CommonMatrixIsPhaseCanonical) {
  const auto dev = build_cnot_pittman();
  auto fam = w_matrices(dev, *dev.subspace_out());
  for (auto& m : fam.members) m.matrix *= std::polar(1.0, 0.7);
  const auto r = proportionality_check(fam);
  EXPECT_NEAR(r.common.w(0, 0).imag(), 0.0, 1e-12);
  EXPECT_GT(r.common.w(0, 0).real(), 0.0);
  EXPECT_LT(completeness_check(r.common.w), 1e-12);
  for (std::size_t j = 0; j < fam.members.size(); ++j) {
    EXPECT_LT(max_abs(fam.members[j].matrix - r.common.scalars[j] * r.common.w), 1e-12);
  }
}

TEST(EffectiveAction, SignFlipHasPiPhase) {
  CMatrix w = CMatrix::Identity(3, 3);
  w(2, 2) = -1.0;
  const auto a = effective_action(w, 2.0);
  EXPECT_NEAR(a.eigenphases[0], 0.0, 1e-12);
  EXPECT_NEAR(a.eigenphases[2], std::numbers::pi, 1e-12);
  EXPECT_LT(a.reconstruction_deviation, 1e-9);
  EXPECT_LT(max_abs(a.h_eff - a.q / 2.0), 1e-15);
  EXPECT_THROW(effective_action(w, 0.0), ValidationError);
  EXPECT_THROW(effective_action(CMatrix::Identity(2, 3)), ValidationError);
  EXPECT_THROW(effective_action(2.0 * w), ValidationError);
}

TEST(DetectOutputBasis, RecoversLogicalSpans) {
  const auto klm = build_klm_ns(false).with_subspace_out(std::nullopt);
  EXPECT_EQ(detect_output_basis(klm).dimension(), 3u);
  const auto cnot = without_corrections(build_cnot_pittman()).with_subspace_out(std::nullopt);
  const auto basis = detect_output_basis(cnot);
  EXPECT_EQ(basis.dimension(), 4u);
  EXPECT_LT(basis.orthonormality_deviation(), 1e-12);
}

TEST(Analyze, DetectedBasisStillUnitaryForKlm) {
  const auto r = analyze(build_klm_ns(false).with_subspace_out(std::nullopt));
  EXPECT_EQ(r.basis_source, BasisSource::Detected);
  EXPECT_TRUE(r.operationally_unitary);
  ASSERT_TRUE(r.action);
  EXPECT_LT(r.action->reconstruction_deviation, 1e-9);
}

TEST(DProbe, SpreadTracksVerdict) {
  EXPECT_LE(randomized_d_probe(build_klm_ns(false), 0, 50), 1e-10);
  EXPECT_NEAR(randomized_d_probe(build_klm_ns(true), 0, 50), 0.14213562373095043, 1e-9);
  EXPECT_THROW(randomized_d_probe(build_klm_ns(false), 0, 1), std::invalid_argument);
}

TEST(DProbe, ExtraPhotonInhibitsCnot) {
  const auto dev = build_cnot_pittman();
  auto vectors = dev.subspace_in().vectors();
  vectors.push_back(special_state_S().basis[0]);
  const auto probed = dev.with_subspace_in(FockSubspaceBasis(dev.computational_in(), vectors));
  for (std::size_t l = 0; l < 16; l += 5) {
    EXPECT_NEAR(randomized_d_probe(probed, l, 10), 1.0 / 64.0, 1e-12) << "L=" << l;
  }
}

}  // namespace
}  // namespace condlo
