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

#include "condlo/cpmap.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "branches.hpp"
#include "condlo/errors.hpp"

namespace condlo {

namespace {

// projected[i][b] = P_L U (|b> (x) |chi_i>).
std::vector<std::vector<FockVector>> projected_states(const ConditionalDevice& dev,
                                                      const detail::LiftedInputs& lifted,
                                                      std::size_t outcome) {
  const auto& full = dev.unitary().output_modes();
  const auto& kets = dev.outcomes()[outcome].signature.kets;
  const auto branches = detail::contract_outcome(dev, lifted, outcome);

  std::vector<std::vector<FockVector>> out(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    out[i].assign(lifted[i].size(), FockVector(full));
  }
  for (const auto& br : branches) {
    for (std::size_t b = 0; b < br.images.size(); ++b) {
      const std::array<FockVector, 2> parts{br.images[b], kets[br.signature]};
      out[br.ancilla][b] = out[br.ancilla][b] + embed_product(full, parts);
    }
  }
  return out;
}

void require_state(const ConditionalDevice& dev, const DensityOperator& rho) {
  validate_density_operator(rho);
  if (!(rho.basis.registry() == dev.computational_in())) {
    throw ValidationError("DensityOperator",
                          "rho must live on the device's computational input modes");
  }
}

}  // namespace

double success_probability(const ConditionalDevice& dev, std::size_t outcome,
                           const DensityOperator& rho, const LiftOptions& options) {
  detail::check_outcome_index(dev, outcome);
  require_state(dev, rho);
  const auto lifted = detail::lift_inputs(dev, rho.basis, options.photon_cap);
  const auto projected = projected_states(dev, lifted, outcome);
  const auto& terms = dev.ancilla().terms();
  const auto d = static_cast<Eigen::Index>(rho.basis.dimension());

  Complex total{};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Complex s{};
    for (Eigen::Index b = 0; b < d; ++b) {
      for (Eigen::Index g = 0; g < d; ++g) {
        if (rho.matrix(b, g) == Complex{}) continue;
        s += rho.matrix(b, g) * inner(projected[i][g], projected[i][b]);
      }
    }
    total += terms[i].probability * s;
  }
  return total.real();
}

DensityOperator v_map(const ConditionalDevice& dev, std::size_t outcome,
                      const DensityOperator& rho, const LiftOptions& options) {
  detail::check_outcome_index(dev, outcome);
  require_state(dev, rho);
  const auto lifted = detail::lift_inputs(dev, rho.basis, options.photon_cap);
  const auto projected = projected_states(dev, lifted, outcome);
  const auto& terms = dev.ancilla().terms();
  const auto full_registry = dev.unitary().output_modes();

  std::set<OccupationVector> support_set;
  for (const auto& per_input : projected) {
    for (const auto& v : per_input) {
      for (const auto& [occ, amp] : v.terms()) support_set.insert(occ);
    }
  }
  const std::vector<OccupationVector> support(support_set.begin(), support_set.end());
  const auto n = static_cast<Eigen::Index>(support.size());
  CMatrix full = CMatrix::Zero(n, n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    FockSubspaceBasis columns(full_registry, projected[i]);
    const CMatrix x = columns.coordinates(support);  // n x d
    full += terms[i].probability * x * rho.matrix * x.adjoint();
  }
  DensityOperator full_op{FockSubspaceBasis::from_occupations(full_registry, support), full,
                          DensityOperator::Kind::Unnormalized};
  return partial_trace_ancilla(full_op, dev.output_partition());
}

DensityOperator conditional_output(const ConditionalDevice& dev, std::size_t outcome,
                                   const DensityOperator& rho, const LiftOptions& options) {
  DensityOperator v = v_map(dev, outcome, rho, options);
  const double d = v.trace();
  if (d <= kZeroProbability) {
    throw ZeroProbabilityError("outcome " + std::to_string(outcome) +
                               " has zero success probability for this input");
  }
  const auto& correction = dev.outcomes()[outcome].correction;
  if (!correction) {
    return {std::move(v.basis), v.matrix / d, DensityOperator::Kind::State};
  }

  // Extend the correction from subspace_out to the whole Fock span by acting
  // as identity on the orthogonal complement.
  const auto& out_basis = *dev.subspace_out();
  std::set<OccupationVector> merged;
  for (const auto& occ : v.basis.support()) merged.insert(occ);
  for (const auto& occ : out_basis.support()) merged.insert(occ);
  const std::vector<OccupationVector> support(merged.begin(), merged.end());
  const auto n = static_cast<Eigen::Index>(support.size());

  const CMatrix embed = v.basis.coordinates(support);  // n x dim(v)
  const CMatrix in_support = embed * v.matrix * embed.adjoint();
  const CMatrix b = out_basis.coordinates(support);
  const CMatrix extended =
      CMatrix::Identity(n, n) +
      b * (*correction - CMatrix::Identity(correction->rows(), correction->cols())) * b.adjoint();

  return {FockSubspaceBasis::from_occupations(dev.computational_out(), support),
          extended * in_support * extended.adjoint() / d, DensityOperator::Kind::State};
}

DensityOperator partial_trace_ancilla(const DensityOperator& full, const ModePartition& partition) {
  const auto& reg = full.basis.registry();
  std::set<std::string> labels;
  for (const auto* list : {&partition.computational, &partition.ancilla}) {
    for (const auto& l : *list) {
      if (!reg.contains(l) || !labels.insert(l).second) {
        throw ValidationError("partition", "partition does not match the operator's modes");
      }
    }
  }
  if (labels.size() != reg.mode_count() || partition.computational.empty()) {
    throw ValidationError("partition", "partition does not match the operator's modes");
  }
  if (!full.basis.is_fock_basis()) {
    throw ValidationError("partition", "operator basis does not factor over the partition");
  }
  const auto d = static_cast<Eigen::Index>(full.basis.dimension());
  if (full.matrix.rows() != d || full.matrix.cols() != d) {
    throw ValidationError("DensityOperator", "matrix shape does not match basis dimension");
  }

  std::vector<std::size_t> comp_idx, anc_idx;
  for (const auto& l : partition.computational) comp_idx.push_back(reg.index_of(l));
  for (const auto& l : partition.ancilla) anc_idx.push_back(reg.index_of(l));

  std::vector<OccupationVector> comp_part, anc_part;
  std::set<OccupationVector> comp_set;
  for (const auto& v : full.basis.vectors()) {
    const auto& occ = v.terms().begin()->first;
    comp_part.push_back(occ.restricted(comp_idx));
    anc_part.push_back(occ.restricted(anc_idx));
    comp_set.insert(comp_part.back());
  }
  const std::vector<OccupationVector> reduced(comp_set.begin(), comp_set.end());
  auto position = [&](const OccupationVector& occ) {
    return std::lower_bound(reduced.begin(), reduced.end(), occ) - reduced.begin();
  };

  const auto m = static_cast<Eigen::Index>(reduced.size());
  CMatrix out = CMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (anc_part[i] == anc_part[j]) {
        out(position(comp_part[i]), position(comp_part[j])) += full.matrix(i, j);
      }
    }
  }
  return {FockSubspaceBasis::from_occupations(ModeRegistry(partition.computational), reduced), out,
          full.kind};
}

}  // namespace condlo
