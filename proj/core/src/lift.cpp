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

#include "condlo/lift.hpp"

#include <cmath>
#include <string>

#include "condlo/errors.hpp"

namespace condlo {

ModeUnitary::ModeUnitary(ModeRegistry input_modes, ModeRegistry output_modes, CMatrix entries)
    : input_(std::move(input_modes)), output_(std::move(output_modes)), entries_(std::move(entries)) {
  if (input_.mode_count() != output_.mode_count()) {
    throw ValidationError("ModeUnitary", "input and output registries differ in size");
  }
  const auto n = static_cast<Eigen::Index>(input_.mode_count());
  if (entries_.rows() != n || entries_.cols() != n) {
    throw ValidationError("ModeUnitary", "matrix must be " + std::to_string(n) + "x" +
                                             std::to_string(n));
  }
  if (!entries_.allFinite()) {
    throw ValidationError("ModeUnitary", "matrix has non-finite entries");
  }
}

ModeUnitary ModeUnitary::identity(ModeRegistry modes) {
  const auto n = static_cast<Eigen::Index>(modes.mode_count());
  return ModeUnitary(modes, modes, CMatrix::Identity(n, n));
}

UnitarityCheck check_mode_unitarity(const CMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw ValidationError("ModeUnitary", "matrix is not square");
  }
  UnitarityCheck r;
  r.max_deviation = unitarity_deviation(m);
  r.unitary = r.max_deviation <= tolerance;
  return r;
}

UnitarityCheck check_mode_unitarity(const ModeUnitary& u, double tolerance) {
  return check_mode_unitarity(u.matrix(), tolerance);
}

namespace {

// state <- sum_c coeff[c] a_c^dagger state, written straight into a fresh map.
FockVector apply_creation_row(const FockVector& state, const CVector& coeff) {
  FockVector out(state.registry());
  for (const auto& [occ, amp] : state.terms()) {
    for (Eigen::Index c = 0; c < coeff.size(); ++c) {
      if (coeff[c] == Complex{}) continue;
      const auto mode = static_cast<std::size_t>(c);
      const auto n = occ[mode];
      out.accumulate(occ.with_count(mode, n + 1), coeff[c] * amp * std::sqrt(double(n) + 1.0));
    }
  }
  out.prune();
  return out;
}

}  // namespace

FockVector lift_apply(const ModeUnitary& u, const FockVector& v, unsigned photon_cap) {
  if (!(v.registry() == u.input_modes())) {
    throw ValidationError("FockVector", "state does not live on the unitary's input modes");
  }
  const CMatrix substitution = u.matrix().conjugate();
  FockVector result(u.output_modes());
  for (const auto& [occ, amp] : v.terms()) {
    if (occ.total() > photon_cap) {
      throw PhotonCapExceeded("term with " + std::to_string(occ.total()) +
                              " photons exceeds the photon cap of " + std::to_string(photon_cap));
    }
    FockVector term = FockVector::vacuum(u.output_modes());
    double norm = 1.0;
    for (std::size_t mode = 0; mode < occ.size(); ++mode) {
      const CVector row = substitution.row(static_cast<Eigen::Index>(mode)).transpose();
      for (std::uint32_t k = 1; k <= occ[mode]; ++k) {
        term = apply_creation_row(term, row);
        norm *= std::sqrt(double(k));
      }
    }
    for (const auto& [out_occ, out_amp] : term.terms()) {
      result.accumulate(out_occ, amp * out_amp / norm);
    }
  }
  result.prune();
  return result;
}

ModeUnitary compose(const ModeUnitary& first, const ModeUnitary& second) {
  if (first.output_modes().labels() != second.input_modes().labels()) {
    throw ValidationError("ModeUnitary", "cannot compose: output modes of the first stage "
                                         "differ from input modes of the second");
  }
  return ModeUnitary(first.input_modes(), second.output_modes(),
                     first.matrix() * second.matrix());
}

}  // namespace condlo
