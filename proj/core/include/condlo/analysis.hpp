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

// Deciding whether a conditional device acts as a fixed unitary on its
// computational subspace.
//
// The decision rests on two checks, both necessary and together sufficient:
//
//  1. Test condition. For every outcome L the test operator
//       T_L = Tr_A(sigma U^dagger P_L U)
//     restricted to the computational subspace must be tau_L times the
//     identity.
//
//  2. Proportionality. For every outcome with tau_L > 0, signature ket k and
//     ancilla term i, the matrix
//       w[L,k,i](out, in) = sqrt(p_i / tau_L) sum_l Vbar_L(out, l) (<k|<l|) U (|in>|chi_i>)
//     either vanishes or is a scalar multiple of one common matrix w.
//
// When both hold, w is unitary and the device implements rho -> w rho w^dagger
// with total success probability sum_L tau_L, independent of rho and L.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "condlo/cpmap.hpp"
#include "condlo/device.hpp"

namespace condlo {

inline constexpr double kDefaultVerdictTolerance = 1e-9;

struct TestOperator {
  CMatrix matrix;
  RVector eigenvalues;  ///< ascending
};

TestOperator test_operator(const ConditionalDevice& dev, std::size_t outcome,
                           const LiftOptions& options = {});

struct TestVerdict {
  bool pass = false;
  double tau = 0.0;            ///< Tr(T) / dim
  double max_deviation = 0.0;  ///< max |T - tau I|
  double spread = 0.0;         ///< largest minus smallest eigenvalue
  bool degenerate = false;     ///< passes with tau == 0: never heralds
};

TestVerdict test_condition(const TestOperator& t, double tolerance = kDefaultVerdictTolerance);

struct WMatrixMember {
  std::size_t outcome = 0;
  std::size_t signature = 0;
  std::size_t ancilla = 0;
  CMatrix matrix;  ///< rows: output basis, columns: input basis
};

struct CommonUnitary {
  CMatrix w;
  std::vector<Complex> scalars;  ///< member = scalar * w, one per member
};

struct WMatrixFamily {
  std::vector<WMatrixMember> members;
  std::optional<CommonUnitary> common;
};

/// One member per (outcome, signature ket, ancilla term), skipping outcomes
/// whose tau_L = Tr(T_L)/dim is at or below `tolerance` and terms with p_i = 0.
/// Throws DegenerateDeviceError when every outcome is skipped.
WMatrixFamily w_matrices(const ConditionalDevice& dev, const FockSubspaceBasis& output_basis,
                         double tolerance = kDefaultVerdictTolerance,
                         const LiftOptions& options = {});

struct ProportionalityResult {
  bool pass = false;
  double relative_sigma2 = 0.0;  ///< second / first singular value of the stacked members
  std::size_t nonvanishing = 0;
  CommonUnitary common;
};

/// Rank-one test on the vectorized nonvanishing members (Frobenius norm above
/// `tolerance`). The common matrix is the dominant singular direction, scaled
/// so that Tr(w^dagger w) = columns and phased so that its first nonzero
/// entry in row-major order is real and positive. Throws
/// DegenerateDeviceError when no member is nonvanishing.
ProportionalityResult proportionality_check(const WMatrixFamily& family,
                                            double tolerance = kDefaultVerdictTolerance);

/// max |w^dagger w - I|.
double completeness_check(const CMatrix& w);

struct EffectiveAction {
  CMatrix q;                  ///< Hermitian, exp(-i q) = w
  RVector eigenphases;        ///< eigenvalues of q, each in (-pi, pi]
  double t_eff = 1.0;
  CMatrix h_eff;              ///< q / t_eff
  double reconstruction_deviation = 0.0;  ///< max |exp(-i q) - w|
};

/// Principal-branch generator of a unitary w. Throws ValidationError("w")
/// if w is not square and unitary within `tolerance`, or t_eff <= 0.
EffectiveAction effective_action(const CMatrix& w, double t_eff = 1.0,
                                 double tolerance = kDefaultVerdictTolerance);

/// Orthonormal basis of the heralded output span, used when the device does
/// not name one. Fock states of the output computational modes are projected
/// onto the span (singular values below 1e-8 relative are discarded) and
/// Gram-Schmidt orthonormalized in lexicographic order, so a span of Fock
/// states comes back as those Fock states. Corrections are not applied.
/// Throws DegenerateDeviceError for an empty image.
FockSubspaceBasis detect_output_basis(const ConditionalDevice& dev,
                                      double tolerance = kDefaultVerdictTolerance,
                                      const LiftOptions& options = {});

/// Largest spread of d_L over the subspace's basis states plus `trials`
/// Haar-random pure states. Zero spread (within tolerance) is equivalent to
/// passing the test condition. Throws std::invalid_argument for trials < 2.
double randomized_d_probe(const ConditionalDevice& dev, std::size_t outcome, std::size_t trials,
                          std::uint64_t seed = 0x5eed, const LiftOptions& options = {});

struct AnalysisOptions {
  double tolerance = kDefaultVerdictTolerance;
  double t_eff = 1.0;
  unsigned photon_cap = kDefaultPhotonCap;
};

enum class BasisSource { User, Detected };

struct OutcomeAnalysis {
  std::size_t index = 0;
  TestOperator test;
  TestVerdict verdict;
};

struct AnalysisReport {
  std::vector<OutcomeAnalysis> outcomes;
  bool all_tests_pass = false;
  bool degenerate = false;
  double total_tau = 0.0;

  BasisSource basis_source = BasisSource::User;
  std::optional<FockSubspaceBasis> output_basis;
  std::size_t input_dimension = 0;

  std::optional<WMatrixFamily> family;
  std::optional<ProportionalityResult> proportionality;
  std::optional<double> completeness_deviation;
  std::optional<EffectiveAction> action;

  AncillaDecomposition::Source sigma_source = AncillaDecomposition::Source::Explicit;
  AnalysisOptions options;

  bool operationally_unitary = false;
};

/// Runs every check and assembles the verdict: operationally unitary iff all
/// test conditions pass, some outcome heralds, the family is proportional and
/// the common w is complete (w^dagger w = I) within tolerance.
AnalysisReport analyze(const ConditionalDevice& dev, const AnalysisOptions& options = {});

}  // namespace condlo
