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

// Multimode Fock-space primitives: mode registries, occupation-number
// labels, sparse state vectors and orthonormal subspace bases.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "condlo/linalg.hpp"

namespace condlo {

/// Terms whose amplitude magnitude drops below this are discarded after every
/// linear operation.
inline constexpr double kAmplitudeCutoff = 1e-14;

/// Ordered set of distinct mode labels. Copies share storage.
class ModeRegistry {
 public:
  explicit ModeRegistry(std::vector<std::string> labels);

  std::size_t mode_count() const noexcept { return impl_->labels.size(); }
  const std::vector<std::string>& labels() const noexcept { return impl_->labels; }
  const std::string& label(std::size_t index) const { return impl_->labels.at(index); }

  bool contains(std::string_view label) const;
  /// Throws ValidationError("mode") for unknown labels.
  std::size_t index_of(std::string_view label) const;

  /// Registry over `labels` (in the given order); each must exist here.
  ModeRegistry subset(std::span<const std::string> labels) const;

  friend bool operator==(const ModeRegistry& a, const ModeRegistry& b) {
    return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
  }

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::map<std::string, std::size_t, std::less<>> index;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Photon count per mode; ordered lexicographically on the counts.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<std::uint32_t> counts);

  static OccupationVector vacuum(std::size_t mode_count) {
    return OccupationVector(std::vector<std::uint32_t>(mode_count, 0));
  }

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint32_t operator[](std::size_t mode) const { return counts_[mode]; }
  std::span<const std::uint32_t> counts() const noexcept { return counts_; }
  std::uint32_t total() const noexcept { return total_; }

  OccupationVector with_count(std::size_t mode, std::uint32_t count) const;
  /// Counts at `modes`, in that order.
  OccupationVector restricted(std::span<const std::size_t> modes) const;

  friend auto operator<=>(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ <=> b.counts_;
  }
  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::uint32_t total_ = 0;
};

/// All occupation vectors over `mode_count` modes with `photons` in total, in
/// ascending lexicographic order. Length is C(photons + mode_count - 1, photons).
std::vector<OccupationVector> enumerate_sector(std::size_t mode_count, unsigned photons);
std::vector<OccupationVector> enumerate_sector(const ModeRegistry& registry, unsigned photons);

/// Sparse superposition of Fock basis states on one registry.
class FockVector {
 public:
  using Terms = std::map<OccupationVector, Complex>;

  explicit FockVector(ModeRegistry registry);
  FockVector(ModeRegistry registry, Terms terms);

  static FockVector vacuum(ModeRegistry registry);
  static FockVector basis(ModeRegistry registry, OccupationVector occupation,
                          Complex amplitude = 1.0);

  const ModeRegistry& registry() const noexcept { return registry_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex amplitude(const OccupationVector& occupation) const;
  double norm() const;

  /// Adds `amplitude` to the coefficient of `occupation` (no pruning).
  void accumulate(const OccupationVector& occupation, Complex amplitude);
  /// Drops terms below kAmplitudeCutoff.
  void prune();

  FockVector normalized() const;

  friend FockVector operator+(const FockVector& a, const FockVector& b);
  friend FockVector operator-(const FockVector& a, const FockVector& b);
  friend FockVector operator*(Complex s, const FockVector& v);
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.registry_ == b.registry_ && a.terms_ == b.terms_;
  }

 private:
  ModeRegistry registry_;
  Terms terms_;
};

FockVector create(const FockVector& v, std::size_t mode);
FockVector create(const FockVector& v, std::string_view mode);
FockVector annihilate(const FockVector& v, std::size_t mode);
FockVector annihilate(const FockVector& v, std::string_view mode);

/// <u|v>; conjugate-linear in u. Throws ValidationError on registry mismatch.
Complex inner(const FockVector& u, const FockVector& v);

/// Tensor product of states living on disjoint mode subsets of `full`.
/// Each part's registry labels name the modes it occupies; together they
/// must cover `full` exactly once.
FockVector embed_product(const ModeRegistry& full, std::span<const FockVector> parts);

/// Partial inner product (<bra| x I) |psi>. `bra` lives on a subset of psi's
/// modes; the result lives on the remaining modes, in psi's registry order.
FockVector partial_inner(const FockVector& bra, const FockVector& psi);

/// The same state on `target`, which must hold exactly v's labels, possibly
/// in a different order.
FockVector permute_modes(const FockVector& v, const ModeRegistry& target);

/// Ordered orthonormal family of states on a common registry.
class FockSubspaceBasis {
 public:
  FockSubspaceBasis(ModeRegistry registry, std::vector<FockVector> vectors);

  /// Basis of single Fock states, one per occupation.
  static FockSubspaceBasis from_occupations(ModeRegistry registry,
                                            std::span<const OccupationVector> occupations);

  const ModeRegistry& registry() const noexcept { return registry_; }
  const std::vector<FockVector>& vectors() const noexcept { return vectors_; }
  std::size_t dimension() const noexcept { return vectors_.size(); }
  const FockVector& operator[](std::size_t i) const { return vectors_.at(i); }

  CMatrix gram() const;
  /// max |G - I|; 0 for the empty basis.
  double orthonormality_deviation() const;
  /// Sorted union of occupations appearing in any vector.
  std::vector<OccupationVector> support() const;
  /// Columns are the vectors' amplitudes on `support`.
  CMatrix coordinates(std::span<const OccupationVector> support) const;
  /// True if every vector is a single Fock state with unit amplitude.
  bool is_fock_basis() const;

  friend bool operator==(const FockSubspaceBasis& a, const FockSubspaceBasis& b) {
    return a.registry_ == b.registry_ && a.vectors_ == b.vectors_;
  }

 private:
  ModeRegistry registry_;
  std::vector<FockVector> vectors_;
};

}  // namespace condlo
