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

#include <cstdint>
#include <random>

#include "condlo/device.hpp"
#include "condlo/linalg.hpp"

namespace condlo::testing {

using Rng = std::mt19937_64;

/// Haar-distributed unitary via QR of a complex Ginibre matrix.
CMatrix haar_unitary(Eigen::Index n, Rng& rng);

/// Uniformly distributed unit vector in C^n.
CVector random_unit_vector(Eigen::Index n, Rng& rng);

/// Full-rank random density matrix G G† / Tr.
CMatrix random_density_matrix(Eigen::Index n, Rng& rng);

DensityOperator random_pure_state(const FockSubspaceBasis& basis, Rng& rng);
DensityOperator random_mixed_state(const FockSubspaceBasis& basis, Rng& rng);

}  // namespace condlo::testing
