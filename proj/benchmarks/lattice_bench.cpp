// Copyright 2026 The rieszlab Authors
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
#include <benchmark/benchmark.h>

#include <vector>

#include "rieszlab/lateral.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/sampling.hpp"

namespace {

using rieszlab::Element;
using rieszlab::Scalar;

// Sawtooth with n teeth; its sup with a shifted copy creates 2n crossings.
Element sawtooth(int n, int phase) {
  std::vector<rieszlab::Breakpoint> pts;
  for (int k = 0; k <= 2 * n; ++k) {
    pts.push_back({Scalar(k, 2 * n), Scalar(((k + phase) % 2 == 0) ? 1 : -1)});
  }
  return Element::piecewise_linear(std::move(pts));
}

void BM_PlSup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Element x = sawtooth(n, 0);
  const Element y = sawtooth(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rieszlab::sup(x, y));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PlSup)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_PlModulus(benchmark::State& state) {
  const Element x = sawtooth(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(rieszlab::abs(x));
}
BENCHMARK(BM_PlModulus)->RangeMultiplier(4)->Range(4, 1024);

void BM_PlLateralInf(benchmark::State& state) {
  const Element x = sawtooth(static_cast<int>(state.range(0)), 0);
  const Element y = rieszlab::pos(x);
  for (auto _ : state) benchmark::DoNotOptimize(rieszlab::lateral_inf(x, y));
}
BENCHMARK(BM_PlLateralInf)->RangeMultiplier(4)->Range(4, 256);

void BM_CoordinateSup(benchmark::State& state) {
  rieszlab::InstanceGenerator gen(1);
  const rieszlab::Space space = rieszlab::Space::coordinate(static_cast<std::size_t>(state.range(0)));
  const Element x = gen.element(space);
  const Element y = gen.element(space);
  for (auto _ : state) benchmark::DoNotOptimize(rieszlab::sup(x, y));
}
BENCHMARK(BM_CoordinateSup)->RangeMultiplier(8)->Range(8, 4096);

void BM_FragmentEnumeration(benchmark::State& state) {
  std::vector<Scalar> ones(static_cast<std::size_t>(state.range(0)), Scalar(1));
  const Element e = Element::coordinate(std::move(ones));
  for (auto _ : state) benchmark::DoNotOptimize(rieszlab::enumerate_fragments(e).materialize());
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_FragmentEnumeration)->DenseRange(4, 12, 4);

}  // namespace
