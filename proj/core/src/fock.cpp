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

#include "condlo/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "condlo/errors.hpp"

namespace condlo {

ModeRegistry::ModeRegistry(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw ValidationError("mode", "a mode registry needs at least one mode");
  }
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw ValidationError("mode", "empty mode label");
    }
    if (!impl->index.emplace(labels[i], i).second) {
      throw ValidationError("mode", "duplicate mode label '" + labels[i] + "'");
    }
  }
  impl->labels = std::move(labels);
  impl_ = std::move(impl);
}

bool ModeRegistry::contains(std::string_view label) const {
  return impl_->index.find(label) != impl_->index.end();
}

std::size_t ModeRegistry::index_of(std::string_view label) const {
  auto it = impl_->index.find(label);
  if (it == impl_->index.end()) {
    throw ValidationError("mode", "unknown mode label '" + std::string(label) + "'");
  }
  return it->second;
}

ModeRegistry ModeRegistry::subset(std::span<const std::string> labels) const {
  for (const auto& l : labels) index_of(l);
  return ModeRegistry(std::vector<std::string>(labels.begin(), labels.end()));
}

OccupationVector::OccupationVector(std::vector<std::uint32_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::uint32_t{0})) {}

OccupationVector OccupationVector::with_count(std::size_t mode, std::uint32_t count) const {
  auto c = counts_;
  c.at(mode) = count;
  return OccupationVector(std::move(c));
}

OccupationVector OccupationVector::restricted(std::span<const std::size_t> modes) const {
  std::vector<std::uint32_t> c;
  c.reserve(modes.size());
  for (auto m : modes) c.push_back(counts_.at(m));
  return OccupationVector(std::move(c));
}

namespace {

void enumerate_into(std::vector<std::uint32_t>& prefix, std::size_t mode_count,
                    unsigned remaining, std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == mode_count) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  // Ascending count in the leading mode gives lexicographic order.
  for (unsigned k = 0; k <= remaining; ++k) {
    prefix.push_back(k);
    enumerate_into(prefix, mode_count, remaining - k, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<OccupationVector> enumerate_sector(std::size_t mode_count, unsigned photons) {
  std::vector<OccupationVector> out;
  if (mode_count == 0) return out;
  std::vector<std::uint32_t> prefix;
  prefix.reserve(mode_count);
  enumerate_into(prefix, mode_count, photons, out);
  return out;
}

std::vector<OccupationVector> enumerate_sector(const ModeRegistry& registry, unsigned photons) {
  return enumerate_sector(registry.mode_count(), photons);
}

FockVector::FockVector(ModeRegistry registry) : registry_(std::move(registry)) {}

FockVector::FockVector(ModeRegistry registry, Terms terms)
    : registry_(std::move(registry)), terms_(std::move(terms)) {
  for (const auto& [occ, amp] : terms_) {
    if (occ.size() != registry_.mode_count()) {
      throw ValidationError("FockVector", "occupation length does not match registry");
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw ValidationError("FockVector", "non-finite amplitude");
    }
  }
  prune();
}

FockVector FockVector::vacuum(ModeRegistry registry) {
  auto occ = OccupationVector::vacuum(registry.mode_count());
  return basis(std::move(registry), std::move(occ));
}

FockVector FockVector::basis(ModeRegistry registry, OccupationVector occupation,
                             Complex amplitude) {
  Terms t;
  t.emplace(std::move(occupation), amplitude);
  return FockVector(std::move(registry), std::move(t));
}

Complex FockVector::amplitude(const OccupationVector& occupation) const {
  auto it = terms_.find(occupation);
  return it == terms_.end() ? Complex{} : it->second;
}

double FockVector::norm() const {
  double s = 0;
  for (const auto& [occ, amp] : terms_) s += std::norm(amp);
  return std::sqrt(s);
}

void FockVector::accumulate(const OccupationVector& occupation, Complex amplitude) {
  auto [it, inserted] = terms_.try_emplace(occupation, amplitude);
  if (!inserted) it->second += amplitude;
}

void FockVector::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kAmplitudeCutoff; });
}

FockVector FockVector::normalized() const {
  double n = norm();
  if (n == 0) throw ValidationError("FockVector", "cannot normalize the zero vector");
  return Complex(1.0 / n) * *this;
}

namespace {

void require_same_registry(const FockVector& a, const FockVector& b) {
  if (!(a.registry() == b.registry())) {
    throw ValidationError("FockVector", "registry mismatch");
  }
}

}  // namespace

FockVector operator+(const FockVector& a, const FockVector& b) {
  require_same_registry(a, b);
  FockVector r = a;
  for (const auto& [occ, amp] : b.terms_) r.accumulate(occ, amp);
  r.prune();
  return r;
}

FockVector operator-(const FockVector& a, const FockVector& b) {
  return a + Complex(-1.0) * b;
}

FockVector operator*(Complex s, const FockVector& v) {
  FockVector r(v.registry_);
  for (const auto& [occ, amp] : v.terms_) r.terms_.emplace_hint(r.terms_.end(), occ, s * amp);
  r.prune();
  return r;
}

FockVector create(const FockVector& v, std::size_t mode) {
  if (mode >= v.registry().mode_count()) {
    throw ValidationError("mode", "mode index out of range");
  }
  FockVector r(v.registry());
  for (const auto& [occ, amp] : v.terms()) {
    auto n = occ[mode];
    r.accumulate(occ.with_count(mode, n + 1), amp * std::sqrt(double(n) + 1.0));
  }
  r.prune();
  return r;
}

FockVector create(const FockVector& v, std::string_view mode) {
  return create(v, v.registry().index_of(mode));
}

FockVector annihilate(const FockVector& v, std::size_t mode) {
  if (mode >= v.registry().mode_count()) {
    throw ValidationError("mode", "mode index out of range");
  }
  FockVector r(v.registry());
  for (const auto& [occ, amp] : v.terms()) {
    auto n = occ[mode];
    if (n == 0) continue;
    r.accumulate(occ.with_count(mode, n - 1), amp * std::sqrt(double(n)));
  }
  r.prune();
  return r;
}

FockVector annihilate(const FockVector& v, std::string_view mode) {
  return annihilate(v, v.registry().index_of(mode));
}

Complex inner(const FockVector& u, const FockVector& v) {
  require_same_registry(u, v);
  const auto& small = u.terms().size() <= v.terms().size() ? u.terms() : v.terms();
  const auto& large = u.terms().size() <= v.terms().size() ? v.terms() : u.terms();
  const bool u_is_small = &small == &u.terms();
  Complex s{};
  for (const auto& [occ, a] : small) {
    auto it = large.find(occ);
    if (it == large.end()) continue;
    s += u_is_small ? std::conj(a) * it->second : std::conj(it->second) * a;
  }
  return s;
}

FockVector embed_product(const ModeRegistry& full, std::span<const FockVector> parts) {
  std::vector<int> owner(full.mode_count(), -1);
  std::vector<std::vector<std::size_t>> placement(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& label : parts[p].registry().labels()) {
      if (!full.contains(label)) {
        throw ValidationError("partition", "mode '" + label + "' is not in the target registry");
      }
      auto idx = full.index_of(label);
      if (owner[idx] != -1) {
        throw ValidationError("partition", "mode '" + label + "' appears in two parts");
      }
      owner[idx] = static_cast<int>(p);
      placement[p].push_back(idx);
    }
  }
  for (std::size_t m = 0; m < owner.size(); ++m) {
    if (owner[m] == -1) {
      throw ValidationError("partition", "mode '" + full.label(m) + "' is not covered");
    }
  }

  FockVector acc = FockVector::vacuum(full);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    FockVector next(full);
    for (const auto& [occ_full, amp_full] : acc.terms()) {
      for (const auto& [occ_part, amp_part] : parts[p].terms()) {
        std::vector<std::uint32_t> c(occ_full.counts().begin(), occ_full.counts().end());
        for (std::size_t k = 0; k < placement[p].size(); ++k) c[placement[p][k]] = occ_part[k];
        next.accumulate(OccupationVector(std::move(c)), amp_full * amp_part);
      }
    }
    next.prune();
    acc = std::move(next);
  }
  return acc;
}

FockVector partial_inner(const FockVector& bra, const FockVector& psi) {
  const auto& reg = psi.registry();
  std::vector<bool> in_bra(reg.mode_count(), false);
  std::vector<std::size_t> bra_modes;
  for (const auto& label : bra.registry().labels()) {
    if (!reg.contains(label)) {
      throw ValidationError("partition", "mode '" + label + "' is not in the state's registry");
    }
    auto idx = reg.index_of(label);
    in_bra[idx] = true;
    bra_modes.push_back(idx);
  }
  std::vector<std::size_t> rest_modes;
  std::vector<std::string> rest_labels;
  for (std::size_t m = 0; m < reg.mode_count(); ++m) {
    if (!in_bra[m]) {
      rest_modes.push_back(m);
      rest_labels.push_back(reg.label(m));
    }
  }
  if (rest_modes.empty()) {
    throw ValidationError("partition", "partial inner product would leave no modes");
  }
  FockVector out{ModeRegistry(std::move(rest_labels))};
  for (const auto& [occ, amp] : psi.terms()) {
    Complex b = bra.amplitude(occ.restricted(bra_modes));
    if (b == Complex{}) continue;
    out.accumulate(occ.restricted(rest_modes), std::conj(b) * amp);
  }
  out.prune();
  return out;
}

FockVector permute_modes(const FockVector& v, const ModeRegistry& target) {
  if (v.registry() == target) return FockVector(target, v.terms());
  const auto& src = v.registry();
  if (src.mode_count() != target.mode_count()) {
    throw ValidationError("partition", "cannot permute between registries of different size");
  }
  std::vector<std::size_t> from(target.mode_count());
  for (std::size_t m = 0; m < target.mode_count(); ++m) from[m] = src.index_of(target.label(m));
  FockVector out(target);
  for (const auto& [occ, amp] : v.terms()) out.accumulate(occ.restricted(from), amp);
  return out;
}

FockSubspaceBasis::FockSubspaceBasis(ModeRegistry registry, std::vector<FockVector> vectors)
    : registry_(std::move(registry)), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_) {
    if (!(v.registry() == registry_)) {
      throw ValidationError("FockSubspaceBasis", "basis vectors must share one registry");
    }
  }
}

FockSubspaceBasis FockSubspaceBasis::from_occupations(
    ModeRegistry registry, std::span<const OccupationVector> occupations) {
  std::vector<FockVector> v;
  v.reserve(occupations.size());
  for (const auto& occ : occupations) v.push_back(FockVector::basis(registry, occ));
  return FockSubspaceBasis(std::move(registry), std::move(v));
}

CMatrix FockSubspaceBasis::gram() const {
  const auto n = static_cast<Eigen::Index>(vectors_.size());
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = inner(vectors_[i], vectors_[j]);
  }
  return g;
}

double FockSubspaceBasis::orthonormality_deviation() const {
  if (vectors_.empty()) return 0.0;
  CMatrix g = gram();
  return max_abs(g - CMatrix::Identity(g.rows(), g.cols()));
}

std::vector<OccupationVector> FockSubspaceBasis::support() const {
  std::set<OccupationVector> s;
  for (const auto& v : vectors_) {
    for (const auto& [occ, amp] : v.terms()) s.insert(occ);
  }
  return {s.begin(), s.end()};
}

CMatrix FockSubspaceBasis::coordinates(std::span<const OccupationVector> support) const {
  CMatrix c = CMatrix::Zero(static_cast<Eigen::Index>(support.size()),
                            static_cast<Eigen::Index>(vectors_.size()));
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    for (const auto& [occ, amp] : vectors_[j].terms()) {
      auto it = std::lower_bound(support.begin(), support.end(), occ);
      if (it == support.end() || !(*it == occ)) {
        throw ValidationError("FockSubspaceBasis", "vector has support outside the given set");
      }
      c(it - support.begin(), static_cast<Eigen::Index>(j)) = amp;
    }
  }
  return c;
}

bool FockSubspaceBasis::is_fock_basis() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [](const FockVector& v) {
    return v.terms().size() == 1 && v.terms().begin()->second == Complex(1.0);
  });
}

}  // namespace condlo
