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


#include <array>
#include <cmath>
#include <filesystem>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "condlo/catalog.hpp"
#include "condlo/cpmap.hpp"
#include "condlo/device_io.hpp"

namespace condlo {
namespace {

TEST(Catalog, KlmMatrixEntries) {
  const auto dev = build_klm_ns(false);
  const CMatrix& u = dev.unitary().matrix();
  EXPECT_NEAR(u(0, 0).real(), -0.414214, 1e-6);
  EXPECT_NEAR(u(0, 1).real(), 0.840896, 1e-6);
  EXPECT_NEAR(u(0, 2).real(), 0.348311, 1e-6);
  EXPECT_LT(check_mode_unitarity(dev.unitary(), 1e-12).max_deviation, 1e-15);
  EXPECT_EQ(dev.subspace_in().dimension(), 3u);
  EXPECT_EQ(build_klm_ns(true).subspace_in().dimension(), 4u);
  EXPECT_EQ(dev.outcomes().size(), 1u);
  EXPECT_FALSE(dev.outcomes()[0].correction.has_value());
}

TEST(Catalog, CnotUnitaryIsPhasedPermutation) {
  const CMatrix& u = build_cnot_pittman().unitary().matrix();
  for (Eigen::Index i = 0; i < 12; ++i) {
    int row_hits = 0;
    int col_hits = 0;
    for (Eigen::Index j = 0; j < 12; ++j) {
      if (std::abs(u(i, j)) > 0) {
        ++row_hits;
        EXPECT_NEAR(std::abs(u(i, j)), 1.0, 1e-15);
      }
      if (std::abs(u(j, i)) > 0) ++col_hits;
    }
    EXPECT_EQ(row_hits, 1);
    EXPECT_EQ(col_hits, 1);
  }
}

TEST(Catalog, CnotSignaturesAreOrthonormal) {
  const auto dev = build_cnot_pittman();
  ASSERT_EQ(dev.outcomes().size(), 16u);
  for (std::size_t a = 0; a < 16; ++a) {
    ASSERT_EQ(dev.outcomes()[a].signature.kets.size(), 1u);
    for (std::size_t b = 0; b < 16; ++b) {
      const Complex g = inner(dev.outcomes()[a].signature.kets[0], dev.outcomes()[b].signature.kets[0]);
      EXPECT_NEAR(std::abs(g - (a == b ? 1.0 : 0.0)), 0.0, 1e-15);
    }
  }
}

TEST(Catalog, CnotPhotonCounts) {
  const auto dev = build_cnot_pittman();
  ASSERT_EQ(dev.ancilla().terms().size(), 1u);
  for (const auto& [o, amp] : dev.ancilla().terms()[0].state.terms()) EXPECT_EQ(o.total(), 4u);
  const auto& full = dev.unitary().input_modes();
  for (const auto& beta : dev.subspace_in().vectors()) {
    const std::array<FockVector, 2> parts{beta, dev.ancilla().terms()[0].state};
    const auto image = lift_apply(dev.unitary(), embed_product(full, parts));
    for (const auto& [o, amp] : image.terms()) EXPECT_EQ(o.total(), 6u);
  }
}

TEST(Catalog, SpecialStateNeverHeralds) {
  const auto s = special_state_S();
  ASSERT_EQ(s.basis.dimension(), 1u);
  EXPECT_EQ(s.basis[0].terms().begin()->first.total(), 3u);
  EXPECT_NEAR(s.basis[0].norm(), 1.0, 1e-15);
  EXPECT_NEAR(s.trace(), 1.0, 1e-15);
  const auto dev = build_cnot_pittman();
  for (std::size_t l = 0; l < 16; ++l) EXPECT_LE(success_probability(dev, l, s), 1e-12);
}

TEST(Catalog, FilesMatchBuilders) {
  const std::filesystem::path dir(CONDLO_CATALOG_DIR);
  EXPECT_EQ(read_file(dir / "klm-ns.json"), export_device(build_klm_ns(false)));
  EXPECT_EQ(read_file(dir / "klm-ns-extended.json"), export_device(build_klm_ns(true)));
  EXPECT_EQ(read_file(dir / "cnot-pittman.json"), export_device(build_cnot_pittman()));
}

}  // namespace
}  // namespace condlo
