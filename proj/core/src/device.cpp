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

#include "condlo/device.hpp"

#include <cmath>
#include <set>
#include <string>

#include "condlo/errors.hpp"

namespace condlo {

namespace {

CMatrix overlaps(const FockSubspaceBasis& from, const FockSubspaceBasis& to) {
  CMatrix c(from.dimension(), to.dimension());
  for (std::size_t i = 0; i < from.dimension(); ++i) {
    for (std::size_t a = 0; a < to.dimension(); ++a) c(i, a) = inner(from[i], to[a]);
  }
  return c;
}

}  // namespace

DensityOperator DensityOperator::pure(const FockVector& psi) {
  FockSubspaceBasis b(psi.registry(), {psi.normalized()});
  return {std::move(b), CMatrix::Ones(1, 1), Kind::State};
}

DensityOperator DensityOperator::pure(FockSubspaceBasis basis, const CVector& coefficients) {
  if (static_cast<std::size_t>(coefficients.size()) != basis.dimension()) {
    throw ValidationError("DensityOperator", "coefficient count does not match basis");
  }
  const double n = coefficients.norm();
  if (n == 0) throw ValidationError("DensityOperator", "zero state vector");
  CVector c = coefficients / n;
  return {std::move(basis), c * c.adjoint(), Kind::State};
}

DensityOperator DensityOperator::maximally_mixed(FockSubspaceBasis basis) {
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  if (d == 0) throw ValidationError("DensityOperator", "empty basis");
  return {std::move(basis), CMatrix::Identity(d, d) / double(d), Kind::State};
}

Complex DensityOperator::element(const FockVector& bra, const FockVector& ket) const {
  const auto d = static_cast<Eigen::Index>(basis.dimension());
  CVector l(d), r(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    l[i] = inner(basis[i], bra);
    r[i] = inner(basis[i], ket);
  }
  return (l.adjoint() * matrix * r)(0, 0);
}

CMatrix DensityOperator::represent(const FockSubspaceBasis& target) const {
  CMatrix c = overlaps(basis, target);
  return c.adjoint() * matrix * c;
}

void validate_density_operator(const DensityOperator& op, const ValidationTolerances& tol) {
  const auto d = static_cast<Eigen::Index>(op.basis.dimension());
  if (op.matrix.rows() != d || op.matrix.cols() != d) {
    throw ValidationError("DensityOperator", "matrix shape does not match basis dimension");
  }
  if (op.basis.orthonormality_deviation() > tol.orthonormal) {
    throw ValidationError("DensityOperator", "basis is not orthonormal");
  }
  if (max_abs(op.matrix - op.matrix.adjoint()) > tol.hermitian) {
    throw ValidationError("DensityOperator", "matrix is not Hermitian");
  }
  if (d > 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(op.matrix, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol.positivity) {
      throw ValidationError("DensityOperator", "matrix has a negative eigenvalue");
    }
  }
  if (op.kind == DensityOperator::Kind::State && std::abs(op.trace() - 1.0) > tol.probability) {
    throw ValidationError("DensityOperator", "state does not have unit trace");
  }
}

AncillaDecomposition::AncillaDecomposition(std::vector<AncillaTerm> terms, Source source)
    : terms_(std::move(terms)), source_(source) {
  const ValidationTolerances tol;
  if (terms_.empty()) {
    throw ValidationError("AncillaDecomposition", "no terms");
  }
  double total = 0;
  for (const auto& t : terms_) {
    if (!(t.probability >= 0.0)) {
      throw ValidationError("AncillaDecomposition", "negative probability");
    }
    if (std::abs(t.state.norm() - 1.0) > tol.probability) {
      throw ValidationError("AncillaDecomposition", "ancilla ket is not normalized");
    }
    if (!(t.state.registry() == terms_.front().state.registry())) {
      throw ValidationError("AncillaDecomposition", "ancilla kets live on different registries");
    }
    total += t.probability;
  }
  if (std::abs(total - 1.0) > tol.probability) {
    throw ValidationError("AncillaDecomposition",
                          "probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

AncillaDecomposition AncillaDecomposition::spectral(const FockSubspaceBasis& basis,
                                                    const CMatrix& sigma,
                                                    const ValidationTolerances& tol) {
  DensityOperator op{basis, sigma, DensityOperator::Kind::State};
  try {
    validate_density_operator(op, tol);
  } catch (const ValidationError& e) {
    throw ValidationError("AncillaDecomposition", e.what());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sigma);
  std::vector<AncillaTerm> terms;
  // Descending weight.
  for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
    const double p = es.eigenvalues()[k];
    if (p <= tol.positivity) continue;
    FockVector chi(basis.registry());
    for (std::size_t a = 0; a < basis.dimension(); ++a) {
      chi = chi + es.eigenvectors()(static_cast<Eigen::Index>(a), k) * basis[a];
    }
    terms.push_back({p, chi.normalized()});
  }
  // Renormalize after dropping numerically-zero weights.
  double total = 0;
  for (const auto& t : terms) total += t.probability;
  for (auto& t : terms) t.probability /= total;
  return AncillaDecomposition(std::move(terms), Source::Spectral);
}

namespace {

ModeRegistry partition_registry(const ModeRegistry& full, const ModePartition& part,
                                const std::vector<std::string>& labels, const char* side) {
  std::set<std::string> seen;
  for (const auto* list : {&part.computational, &part.ancilla}) {
    for (const auto& l : *list) {
      if (!full.contains(l)) {
        throw ValidationError("partition", std::string(side) + " partition names unknown mode '" +
                                               l + "'");
      }
      if (!seen.insert(l).second) {
        throw ValidationError("partition", std::string(side) + " partition lists mode '" + l +
                                               "' twice");
      }
    }
  }
  if (seen.size() != full.mode_count()) {
    throw ValidationError("partition", std::string(side) + " partition does not cover every mode");
  }
  if (labels.empty()) {
    throw ValidationError("partition", std::string(side) + " partition has an empty side");
  }
  return ModeRegistry(labels);
}

}  // namespace

ConditionalDevice::ConditionalDevice(ModeUnitary unitary, ModePartition input_partition,
                                     ModePartition output_partition, AncillaDecomposition ancilla,
                                     FockSubspaceBasis subspace_in,
                                     std::optional<FockSubspaceBasis> subspace_out,
                                     std::vector<Outcome> outcomes)
    : unitary_(std::move(unitary)),
      input_partition_(std::move(input_partition)),
      output_partition_(std::move(output_partition)),
      ancilla_(std::move(ancilla)),
      subspace_in_(std::move(subspace_in)),
      subspace_out_(std::move(subspace_out)),
      outcomes_(std::move(outcomes)),
      comp_in_(partition_registry(unitary_.input_modes(), input_partition_,
                                  input_partition_.computational, "input")),
      anc_in_(partition_registry(unitary_.input_modes(), input_partition_,
                                 input_partition_.ancilla, "input")),
      comp_out_(partition_registry(unitary_.output_modes(), output_partition_,
                                   output_partition_.computational, "output")),
      anc_out_(partition_registry(unitary_.output_modes(), output_partition_,
                                  output_partition_.ancilla, "output")) {
  validate();
}

void ConditionalDevice::validate() const {
  const ValidationTolerances tol;

  auto u = check_mode_unitarity(unitary_, tol.unitary);
  if (!u.unitary) {
    throw ValidationError("ModeUnitary", "matrix is not unitary (max deviation " +
                                             std::to_string(u.max_deviation) + ")");
  }

  for (const auto& t : ancilla_.terms()) {
    if (!(t.state.registry() == anc_in_)) {
      throw ValidationError("AncillaDecomposition",
                            "ancilla kets must live on the input ancilla modes");
    }
  }

  if (subspace_in_.dimension() == 0) {
    throw ValidationError("subspace_in", "computational subspace is empty");
  }
  if (!(subspace_in_.registry() == comp_in_)) {
    throw ValidationError("subspace_in", "basis must live on the input computational modes");
  }
  if (subspace_in_.orthonormality_deviation() > tol.orthonormal) {
    throw ValidationError("subspace_in", "basis is not orthonormal");
  }
  if (subspace_out_) {
    if (subspace_out_->dimension() == 0) {
      throw ValidationError("subspace_out", "output subspace is empty");
    }
    if (!(subspace_out_->registry() == comp_out_)) {
      throw ValidationError("subspace_out", "basis must live on the output computational modes");
    }
    if (subspace_out_->orthonormality_deviation() > tol.orthonormal) {
      throw ValidationError("subspace_out", "basis is not orthonormal");
    }
  }

  if (outcomes_.empty()) {
    throw ValidationError("DetectionSignature", "device has no outcomes");
  }
  std::vector<FockVector> all_kets;
  for (std::size_t l = 0; l < outcomes_.size(); ++l) {
    const auto& o = outcomes_[l];
    if (o.signature.kets.empty()) {
      throw ValidationError("DetectionSignature",
                            "outcome " + std::to_string(l) + " has no signature kets");
    }
    for (const auto& k : o.signature.kets) {
      if (!(k.registry() == anc_out_)) {
        throw ValidationError("DetectionSignature",
                              "signature kets must live on the output ancilla modes");
      }
      all_kets.push_back(k);
    }
    if (o.correction) {
      if (!subspace_out_) {
        throw ValidationError("correction", "a non-identity correction needs subspace_out");
      }
      const auto d = static_cast<Eigen::Index>(subspace_out_->dimension());
      if (o.correction->rows() != d || o.correction->cols() != d) {
        throw ValidationError("correction", "outcome " + std::to_string(l) +
                                                ": correction must match subspace_out dimension");
      }
      if (unitarity_deviation(*o.correction) > tol.unitary) {
        throw ValidationError("correction",
                              "outcome " + std::to_string(l) + ": correction is not unitary");
      }
    }
  }
  // Orthonormality across all outcomes.
  FockSubspaceBasis kets(anc_out_, std::move(all_kets));
  if (kets.orthonormality_deviation() > tol.orthonormal) {
    throw ValidationError("DetectionSignature", "signature kets are not orthonormal");
  }
}

ConditionalDevice ConditionalDevice::with_subspace_in(FockSubspaceBasis basis) const {
  return ConditionalDevice(unitary_, input_partition_, output_partition_, ancilla_,
                           std::move(basis), subspace_out_, outcomes_);
}

ConditionalDevice ConditionalDevice::with_subspace_out(
    std::optional<FockSubspaceBasis> basis) const {
  return ConditionalDevice(unitary_, input_partition_, output_partition_, ancilla_, subspace_in_,
                           std::move(basis), outcomes_);
}

ConditionalDevice ConditionalDevice::with_outcomes(std::vector<Outcome> outcomes) const {
  return ConditionalDevice(unitary_, input_partition_, output_partition_, ancilla_, subspace_in_,
                           subspace_out_, std::move(outcomes));
}

}  // namespace condlo
