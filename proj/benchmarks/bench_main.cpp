// Copyright 2026 The quadricode developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "quadricode/analysis.hpp"
#include "quadricode/codes.hpp"
#include "quadricode/field.hpp"
#include "quadricode/geometry.hpp"
#include "quadricode/matrix.hpp"

namespace {

using namespace quadricode;

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(2, static_cast<uint32_t>(state.range(0)));
  const uint32_t n = f.cardinality();
  uint32_t a = 1, b = f.primitive_element();
  for (auto _ : state) {
    a = f.mul(a, b);
    b = (b + 1) % n;
    if (b == 0) b = 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_FieldPow(benchmark::State& state) {
  const Field f = Field::make(5, 2);
  const uint32_t w = f.primitive_element();
  int64_t e = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.pow(w, e));
    e = (e + 7) % 1021;
  }
}
BENCHMARK(BM_FieldPow);

void BM_Rref(benchmark::State& state) {
  const Field f = Field::make(5, 1);
  const auto rows = static_cast<size_t>(state.range(0));
  std::mt19937_64 rng(12345);
  Matrix m(f, rows, 2 * rows);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      m.set(i, j, static_cast<uint32_t>(rng() % 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m).rank);
  }
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(64);

void BM_EvaluationCode(benchmark::State& state) {
  const Field f = Field::make(static_cast<uint32_t>(state.range(0)), 1);
  const auto pts = segre_variety(f, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluation_code(f, pts, 2).dimension());
  }
}
BENCHMARK(BM_EvaluationCode)->Arg(5)->Arg(7)->Arg(9)->Arg(11);

void BM_MinDistanceExhaustive(benchmark::State& state) {
  const Field f = Field::make(static_cast<uint32_t>(state.range(0)), 1);
  const LinearCode c = evaluation_code(f, segre_variety(f, 2), 1);
  for (auto _ : state) {
    const auto rep = min_distance_exhaustive(c, 1ull << 40);
    benchmark::DoNotOptimize(rep.d_exact);
  }
  state.SetItemsProcessed(
      static_cast<int64_t>(state.iterations()) *
      static_cast<int64_t>(scalar_class_count(f.cardinality(), 4)));
}
BENCHMARK(BM_MinDistanceExhaustive)->Arg(5)->Arg(7)->Arg(9);

void BM_MinDistancePacked(benchmark::State& state) {
  // Characteristic-2 instances take the bit-packed scan path.
  const Field f = Field::make(2, static_cast<uint32_t>(state.range(0)));
  const LinearCode c = evaluation_code(f, segre_variety(f, 2), 1);
  for (auto _ : state) {
    const auto rep = min_distance_exhaustive(c, 1ull << 40);
    benchmark::DoNotOptimize(rep.d_exact);
  }
  state.SetItemsProcessed(
      static_cast<int64_t>(state.iterations()) *
      static_cast<int64_t>(scalar_class_count(f.cardinality(), 4)));
}
BENCHMARK(BM_MinDistancePacked)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
