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

// Passive linear-optical evolution: a mode-level unitary matrix and its
// induced action on few-photon Fock states.

#include "condlo/fock.hpp"
#include "condlo/linalg.hpp"

namespace condlo {

inline constexpr unsigned kDefaultPhotonCap = 8;

/// Single-photon transfer matrix of a passive device.
///
/// Rows are indexed by input modes, columns by output modes. An input photon
/// in mode r leaves as sum_c conj(entries(r, c)) a_c^dagger |vac>, i.e. the
/// stored matrix is the one whose complex conjugate gives the output
/// amplitudes.
class ModeUnitary {
 public:
  /// Throws ValidationError("ModeUnitary") on shape mismatch. Unitarity is
  /// not enforced here; see check_mode_unitarity.
  ModeUnitary(ModeRegistry input_modes, ModeRegistry output_modes, CMatrix entries);

  static ModeUnitary identity(ModeRegistry modes);

  const ModeRegistry& input_modes() const noexcept { return input_; }
  const ModeRegistry& output_modes() const noexcept { return output_; }
  const CMatrix& matrix() const noexcept { return entries_; }

  friend bool operator==(const ModeUnitary& a, const ModeUnitary& b) {
    return a.input_ == b.input_ && a.output_ == b.output_ && a.entries_ == b.entries_;
  }

 private:
  ModeRegistry input_;
  ModeRegistry output_;
  CMatrix entries_;
};

struct UnitarityCheck {
  bool unitary = false;
  double max_deviation = 0.0;
};

/// Throws ValidationError("ModeUnitary") for a non-square matrix.
UnitarityCheck check_mode_unitarity(const CMatrix& m, double tolerance);
UnitarityCheck check_mode_unitarity(const ModeUnitary& u, double tolerance);

/// Applies the lifted unitary to `v` (which must live on u.input_modes()).
///
/// Each basis term is written as a creation-operator monomial on the vacuum,
/// every a_in^dagger is replaced by sum_out conj(U(in, out)) a_out^dagger, and
/// the product is re-expanded. Throws PhotonCapExceeded if any term carries
/// more than `photon_cap` photons.
FockVector lift_apply(const ModeUnitary& u, const FockVector& v,
                      unsigned photon_cap = kDefaultPhotonCap);

/// The device `first` followed by `second`. The output labels of `first` must
/// equal the input labels of `second`. With the conjugate-substitution
/// convention the composite matrix is first.matrix() * second.matrix().
ModeUnitary compose(const ModeUnitary& first, const ModeUnitary& second);

}  // namespace condlo
