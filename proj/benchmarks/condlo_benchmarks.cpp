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


#include <random>
#include <string>
#include <vector>

#include <Eigen/QR>
#include <benchmark/benchmark.h>

#include "condlo/analysis.hpp"
#include "condlo/catalog.hpp"
#include "condlo/lift.hpp"

namespace {

using namespace condlo;

CMatrix random_unitary(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return Eigen::HouseholderQR<CMatrix>(m).householderQ();
}

void BM_LiftApply(benchmark::State& state) {
  const auto modes = static_cast<std::size_t>(state.range(0));
  const auto photons = static_cast<std::uint32_t>(state.range(1));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < modes; ++i) labels.push_back("m" + std::to_string(i));
  const ModeRegistry reg(labels);
  const ModeUnitary u(reg, reg, random_unitary(static_cast<Eigen::Index>(modes), 7));
  auto occ = OccupationVector::vacuum(modes).with_count(0, photons);
  const auto v = FockVector::basis(reg, occ);
  for (auto _ : state) benchmark::DoNotOptimize(lift_apply(u, v, 16));
}
BENCHMARK(BM_LiftApply)->Args({3, 3})->Args({6, 4})->Args({8, 6})->Args({12, 6});

void BM_AnalyzeKlm(benchmark::State& state) {
  const auto dev = build_klm_ns(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(dev));
}
BENCHMARK(BM_AnalyzeKlm)->Arg(0)->Arg(1);

void BM_AnalyzeCnot(benchmark::State& state) {
  const auto dev = build_cnot_pittman();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(dev));
}
BENCHMARK(BM_AnalyzeCnot);

void BM_TestOperatorCnot(benchmark::State& state) {
  const auto dev = build_cnot_pittman();
  for (auto _ : state) benchmark::DoNotOptimize(test_operator(dev, 5));
}
BENCHMARK(BM_TestOperatorCnot);

}  // namespace

BENCHMARK_MAIN();
