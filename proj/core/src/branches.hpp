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

// Internal: the per-(signature, ancilla term) images that every part of the
// analysis is built from.

#include <cstddef>
#include <vector>

#include "condlo/device.hpp"

namespace condlo::detail {

/// lifted[i][b] = U (|inputs[b]> (x) |chi_i>) on the full output registry.
using LiftedInputs = std::vector<std::vector<FockVector>>;

LiftedInputs lift_inputs(const ConditionalDevice& dev, const FockSubspaceBasis& inputs,
                         unsigned photon_cap);

/// images[b] = (<k| (x) I) lifted[ancilla][b], living on the output
/// computational modes.
struct Branch {
  std::size_t signature = 0;
  std::size_t ancilla = 0;
  double probability = 0.0;
  std::vector<FockVector> images;
};

std::vector<Branch> contract_outcome(const ConditionalDevice& dev, const LiftedInputs& lifted,
                                     std::size_t outcome);

/// Throws ValidationError("outcome") for an out-of-range index.
void check_outcome_index(const ConditionalDevice& dev, std::size_t outcome);

/// T(a, b) = sum_branches p <image_a | image_b>.
CMatrix test_matrix(const std::vector<Branch>& branches, std::size_t dimension);

}  // namespace condlo::detail
