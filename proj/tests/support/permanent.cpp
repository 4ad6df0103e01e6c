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


#include "permanent.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace condlo::testing {

Complex permanent(const CMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return 1.0;
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    Complex prod = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex row{};
      for (Eigen::Index j = 0; j < n; ++j) {
        if (s & (std::uint64_t{1} << j)) row += m(i, j);
      }
      prod *= row;
    }
    const int bits = __builtin_popcountll(s);
    total += ((n - bits) % 2 == 0 ? 1.0 : -1.0) * prod;
  }
  return total;
}

namespace {

std::vector<Eigen::Index> expand(const OccupationVector& occ) {
  std::vector<Eigen::Index> idx;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    for (std::uint32_t k = 0; k < occ[m]; ++k) idx.push_back(static_cast<Eigen::Index>(m));
  }
  return idx;
}

double factorial(std::uint32_t n) { return std::tgamma(n + 1.0); }

}  // namespace

Complex amplitude_permanent(const CMatrix& u, const OccupationVector& in,
                            const OccupationVector& out) {
  if (in.total() != out.total()) return 0.0;
  const auto rows = expand(in);
  const auto cols = expand(out);
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix sub(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) sub(i, j) = std::conj(u(rows[i], cols[j]));
  }
  double norm = 1.0;
  for (std::size_t m = 0; m < in.size(); ++m) norm *= factorial(in[m]);
  for (std::size_t m = 0; m < out.size(); ++m) norm *= factorial(out[m]);
  return permanent(sub) / std::sqrt(norm);
}

}  // namespace condlo::testing
