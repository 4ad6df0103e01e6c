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

// Conditional measurement devices: pre-measurement evolution, ancilla
// preparation, heralding signatures and feed-forward corrections.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "condlo/fock.hpp"
#include "condlo/lift.hpp"
#include "condlo/linalg.hpp"

namespace condlo {

/// Tolerances applied when a device or a state is validated.
struct ValidationTolerances {
  double unitary = 1e-12;
  double orthonormal = 1e-10;
  double probability = 1e-10;
  double hermitian = 1e-12;
  double positivity = 1e-10;
};

/// Operator expressed in an orthonormal basis: matrix(a, b) = <a|op|b>.
struct DensityOperator {
  enum class Kind { State, Unnormalized };

  FockSubspaceBasis basis;
  CMatrix matrix;
  Kind kind = Kind::State;

  /// |psi><psi| / <psi|psi> on the one-vector basis {psi/|psi|}.
  static DensityOperator pure(const FockVector& psi);
  /// |c><c| in `basis` coordinates (c is normalized first).
  static DensityOperator pure(FockSubspaceBasis basis, const CVector& coefficients);
  /// I / dim on `basis`.
  static DensityOperator maximally_mixed(FockSubspaceBasis basis);

  double trace() const { return matrix.trace().real(); }
  /// <bra|op|ket> for arbitrary vectors on the operator's registry.
  Complex element(const FockVector& bra, const FockVector& ket) const;
  /// Matrix of the operator in another orthonormal basis on the same registry.
  CMatrix represent(const FockSubspaceBasis& target) const;
};

/// Checks shape, Hermiticity and positivity; for Kind::State also unit trace.
/// Throws ValidationError("DensityOperator").
void validate_density_operator(const DensityOperator& op, const ValidationTolerances& tol = {});

struct AncillaTerm {
  double probability = 0.0;
  FockVector state;
};

/// Convex decomposition sigma = sum_i p_i |chi_i><chi_i| of the ancilla state.
class AncillaDecomposition {
 public:
  enum class Source { Explicit, Spectral };

  AncillaDecomposition(std::vector<AncillaTerm> terms, Source source = Source::Explicit);

  /// Eigen-decomposition of a density matrix given in `basis`; zero-weight
  /// eigenvectors are dropped.
  static AncillaDecomposition spectral(const FockSubspaceBasis& basis, const CMatrix& sigma,
                                       const ValidationTolerances& tol = {});

  const std::vector<AncillaTerm>& terms() const noexcept { return terms_; }
  Source source() const noexcept { return source_; }

  friend bool operator==(const AncillaDecomposition& a, const AncillaDecomposition& b) {
    if (a.source_ != b.source_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].probability != b.terms_[i].probability ||
          !(a.terms_[i].state == b.terms_[i].state)) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<AncillaTerm> terms_;
  Source source_;
};

/// Orthonormal output-ancilla kets whose detection heralds one outcome.
struct DetectionSignature {
  std::vector<FockVector> kets;

  friend bool operator==(const DetectionSignature&, const DetectionSignature&) = default;
};

/// One heralded outcome together with its feed-forward correction, which acts
/// on the output computational basis. An empty correction means identity.
struct Outcome {
  DetectionSignature signature;
  std::optional<CMatrix> correction;

  friend bool operator==(const Outcome& a, const Outcome& b) {
    return a.signature == b.signature && a.correction.has_value() == b.correction.has_value() &&
           (!a.correction || *a.correction == *b.correction);
  }
};

/// Split of one registry into computational and ancilla mode labels.
struct ModePartition {
  std::vector<std::string> computational;
  std::vector<std::string> ancilla;

  friend bool operator==(const ModePartition&, const ModePartition&) = default;
};

/// Everything needed to evaluate the conditional map rho -> rho_bar.
///
/// Construction validates the whole description and throws ValidationError
/// naming the first broken invariant. Instances are immutable; use the
/// with_* helpers to derive variants.
class ConditionalDevice {
 public:
  ConditionalDevice(ModeUnitary unitary, ModePartition input_partition,
                    ModePartition output_partition, AncillaDecomposition ancilla,
                    FockSubspaceBasis subspace_in, std::optional<FockSubspaceBasis> subspace_out,
                    std::vector<Outcome> outcomes);

  const ModeUnitary& unitary() const noexcept { return unitary_; }
  const ModePartition& input_partition() const noexcept { return input_partition_; }
  const ModePartition& output_partition() const noexcept { return output_partition_; }
  const AncillaDecomposition& ancilla() const noexcept { return ancilla_; }
  const FockSubspaceBasis& subspace_in() const noexcept { return subspace_in_; }
  const std::optional<FockSubspaceBasis>& subspace_out() const noexcept { return subspace_out_; }
  const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }

  const ModeRegistry& computational_in() const noexcept { return comp_in_; }
  const ModeRegistry& ancilla_in() const noexcept { return anc_in_; }
  const ModeRegistry& computational_out() const noexcept { return comp_out_; }
  const ModeRegistry& ancilla_out() const noexcept { return anc_out_; }

  ConditionalDevice with_subspace_in(FockSubspaceBasis basis) const;
  ConditionalDevice with_subspace_out(std::optional<FockSubspaceBasis> basis) const;
  ConditionalDevice with_outcomes(std::vector<Outcome> outcomes) const;

  friend bool operator==(const ConditionalDevice& a, const ConditionalDevice& b) {
    return a.unitary_ == b.unitary_ && a.input_partition_ == b.input_partition_ &&
           a.output_partition_ == b.output_partition_ && a.ancilla_ == b.ancilla_ &&
           a.subspace_in_ == b.subspace_in_ && a.subspace_out_ == b.subspace_out_ &&
           a.outcomes_ == b.outcomes_;
  }

 private:
  void validate() const;

  ModeUnitary unitary_;
  ModePartition input_partition_;
  ModePartition output_partition_;
  AncillaDecomposition ancilla_;
  FockSubspaceBasis subspace_in_;
  std::optional<FockSubspaceBasis> subspace_out_;
  std::vector<Outcome> outcomes_;

  ModeRegistry comp_in_;
  ModeRegistry anc_in_;
  ModeRegistry comp_out_;
  ModeRegistry anc_out_;
};

}  // namespace condlo
