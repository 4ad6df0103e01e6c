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

#include "branches.hpp"

#include <array>
#include <string>

#include "condlo/errors.hpp"

namespace condlo::detail {

LiftedInputs lift_inputs(const ConditionalDevice& dev, const FockSubspaceBasis& inputs,
                         unsigned photon_cap) {
  if (!(inputs.registry() == dev.computational_in())) {
    throw ValidationError("DensityOperator",
                          "input basis must live on the device's computational input modes");
  }
  const auto& full = dev.unitary().input_modes();
  LiftedInputs out;
  out.reserve(dev.ancilla().terms().size());
  for (const auto& term : dev.ancilla().terms()) {
    std::vector<FockVector> per_input;
    per_input.reserve(inputs.dimension());
    for (const auto& beta : inputs.vectors()) {
      const std::array<FockVector, 2> parts{beta, term.state};
      per_input.push_back(lift_apply(dev.unitary(), embed_product(full, parts), photon_cap));
    }
    out.push_back(std::move(per_input));
  }
  return out;
}

void check_outcome_index(const ConditionalDevice& dev, std::size_t outcome) {
  if (outcome >= dev.outcomes().size()) {
    throw ValidationError("outcome", "index " + std::to_string(outcome) + " out of range (" +
                                         std::to_string(dev.outcomes().size()) + " outcomes)");
  }
}

std::vector<Branch> contract_outcome(const ConditionalDevice& dev, const LiftedInputs& lifted,
                                     std::size_t outcome) {
  check_outcome_index(dev, outcome);
  const auto& kets = dev.outcomes()[outcome].signature.kets;
  const auto& terms = dev.ancilla().terms();
  std::vector<Branch> branches;
  for (std::size_t k = 0; k < kets.size(); ++k) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Branch b{k, i, terms[i].probability, {}};
      b.images.reserve(lifted[i].size());
      for (const auto& psi : lifted[i]) {
        b.images.push_back(permute_modes(partial_inner(kets[k], psi), dev.computational_out()));
      }
      branches.push_back(std::move(b));
    }
  }
  return branches;
}

CMatrix test_matrix(const std::vector<Branch>& branches, std::size_t dimension) {
  const auto d = static_cast<Eigen::Index>(dimension);
  CMatrix t = CMatrix::Zero(d, d);
  for (const auto& br : branches) {
    if (br.probability == 0.0) continue;
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        t(a, b) += br.probability * inner(br.images[a], br.images[b]);
      }
    }
  }
  return t;
}

}  // namespace condlo::detail
