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

// The heralded map rho -> rho_bar of a conditional device: success
// probability d(rho), the unnormalized map V(rho), and the normalized,
// feed-forward corrected output.

#include <cstddef>

#include "condlo/device.hpp"

namespace condlo {

struct LiftOptions {
  unsigned photon_cap = kDefaultPhotonCap;
};

/// Success probabilities at or below this are treated as zero.
inline constexpr double kZeroProbability = 1e-14;

/// d_L(rho) = Tr(U (rho (x) sigma) U^dagger P_L). `rho` must be a valid state
/// whose basis lives on the device's computational input modes.
double success_probability(const ConditionalDevice& dev, std::size_t outcome,
                           const DensityOperator& rho, const LiftOptions& options = {});

/// V_L(rho) = Tr_Abar(P_L U (rho (x) sigma) U^dagger P_L), on the Fock states of
/// the output computational modes reachable from rho's basis. Unnormalized;
/// no correction applied.
DensityOperator v_map(const ConditionalDevice& dev, std::size_t outcome,
                      const DensityOperator& rho, const LiftOptions& options = {});

/// Corrected and normalized output V_L-bar V_L(rho) V_L-bar^dagger / d_L(rho).
/// Throws ZeroProbabilityError when d_L(rho) vanishes.
DensityOperator conditional_output(const ConditionalDevice& dev, std::size_t outcome,
                                   const DensityOperator& rho, const LiftOptions& options = {});

/// Traces the ancilla modes of `partition` out of an operator on the full
/// output registry. The operator's basis must consist of single Fock states.
DensityOperator partial_trace_ancilla(const DensityOperator& full, const ModePartition& partition);

}  // namespace condlo
