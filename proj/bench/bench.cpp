// Copyright 2026 The richelot Authors.
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "richelot/cartier.hpp"
#include "richelot/involution.hpp"

using namespace richelot;

namespace {

Poly random_poly(const Field& k, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Fq> c;
  for (int i = 0; i <= degree; ++i) c.push_back(k->element(rng() % k->order()));
  c.back() = k->one();
  return Poly(k, std::move(c));
}

template <Poly (*Mul)(const Poly&, const Poly&)>
void BM_Mul(benchmark::State& state) {
  const Field k = make_field(1000003);
  const Poly a = random_poly(k, static_cast<int>(state.range(0)), 1);
  const Poly b = random_poly(k, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}
BENCHMARK(BM_Mul<serial::mul>)->Arg(256)->Arg(2048);
BENCHMARK(BM_Mul<parallel::mul>)->Arg(256)->Arg(2048);

template <std::vector<Fq> (*Roots)(const Poly&, std::uint64_t)>
void BM_Roots(benchmark::State& state) {
  const Field k = make_field(3, static_cast<unsigned>(state.range(0)));
  const Poly f = random_poly(k, 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Roots(f, kExhaustionBound));
}
BENCHMARK(BM_Roots<serial::roots_in_field>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Roots<parallel::roots_in_field>)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

std::vector<ProjPoint> symmetric_points(const Field& k, int pairs) {
  std::vector<ProjPoint> pts;
  for (int i = 1; i <= pairs; ++i) {
    pts.push_back(ProjPoint::finite(k->from_int(i)));
    pts.push_back(ProjPoint::finite(k->from_int(-i)));
  }
  return pts;
}

template <std::vector<MobiusMap> (*Search)(const Field&, std::span<const ProjPoint>, InvolutionFilter)>
void BM_Involutions(benchmark::State& state) {
  const Field k = make_field(10007);
  const auto pts = symmetric_points(k, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Search(k, pts, InvolutionFilter::All));
}
BENCHMARK(BM_Involutions<serial::find_branch_involutions>)->Arg(4)->Arg(8);
BENCHMARK(BM_Involutions<parallel::find_branch_involutions>)->Arg(4)->Arg(8);

template <std::vector<ScanRow> (*Scan)(std::span<const std::int64_t>, std::span<const std::uint32_t>)>
void BM_Scan(benchmark::State& state) {
  const std::vector<std::int64_t> f{1, 0, 0, 0, 0, 0, 0, 0, 0, 1};
  const auto primes = odd_primes(3, static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(f, primes));
}
BENCHMARK(BM_Scan<serial::congruence_scan>)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<parallel::congruence_scan>)->Arg(200)->Arg(600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
