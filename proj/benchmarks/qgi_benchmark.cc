// Copyright 2026 The qgame-iso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/isomorphism.h"
#include "qgi/schemes.h"

namespace qgi {
namespace {

void BM_RefinedPayoffMatrix(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BimatrixGame g = RandomIntegerGame(2, 2, rng);
  const StateVector psi = RandomState({2, 2}, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RefinedScheme(g, psi).PayoffMatrix());
  }
}
BENCHMARK(BM_RefinedPayoffMatrix);

void BM_RefinedOracle(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BimatrixGame g = RandomIntegerGame(2, 2, rng);
  const StateVector psi = RandomState({2, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(RefinedMatrixOracle(g, psi));
}
BENCHMARK(BM_RefinedOracle);

void BM_GeneralizedMw3x3(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BimatrixGame g = RandomIntegerGame(3, 3, rng);
  const StateVector psi = RandomState({3, 3}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(GeneralizedMwGame(g, psi));
}
BENCHMARK(BM_GeneralizedMw3x3);

void BM_FindIsomorphisms6x6(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const BimatrixGame q1 =
      GeneralizedMwGame(RandomIntegerGame(3, 3, rng), RandomState({3, 3}, rng));
  const GameMapping f = RandomRelabelling(6, 6, rng);
  const BimatrixGame q2 = RelabelGame(q1, f);
  for (auto _ : state) benchmark::DoNotOptimize(FindIsomorphisms(q1, q2));
}
BENCHMARK(BM_FindIsomorphisms6x6);

}  // namespace
}  // namespace qgi

BENCHMARK_MAIN();
