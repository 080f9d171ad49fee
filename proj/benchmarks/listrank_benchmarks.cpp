// Copyright 2026 The listrank Authors.
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

#include <algorithm>
#include <numeric>
#include <vector>

#include <benchmark/benchmark.h>

#include "listrank/acquisition.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/random.hpp"

namespace listrank {
namespace {

std::vector<RankingObservation> make_log(int n, int k, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> truth(n);
  std::normal_distribution<double> normal;
  for (double& u : truth) u = normal(rng);
  std::vector<RankingObservation> log;
  for (int t = 1; t <= count; ++t) {
    RankingObservation obs;
    obs.iteration = t;
    obs.subset = select_uniform(n, k, rng);
    obs.permutation = sample_ranking(truth, obs.subset, 1.0, rng);
    obs.judge_tag = "bench";
    log.push_back(std::move(obs));
  }
  return log;
}

void BM_LogLikelihood(benchmark::State& state) {
  const int n = 60;
  const int k = static_cast<int>(state.range(0));
  const auto log = make_log(n, k, 30, 1);
  const std::vector<double> u(n, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(log_likelihood(u, log));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(log.size()));
}
BENCHMARK(BM_LogLikelihood)->Arg(5)->Arg(6)->Arg(10);

void BM_Gradient(benchmark::State& state) {
  const int n = 60;
  const auto log = make_log(n, 6, 30, 2);
  const std::vector<double> u(n, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(gradient(u, log, 0.1));
}
BENCHMARK(BM_Gradient);

void BM_FitCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto log = make_log(n, 6, static_cast<int>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fit(log, n, FitOptions{}));
}
BENCHMARK(BM_FitCold)->Args({30, 30})->Args({60, 30})->Args({200, 100})->Unit(benchmark::kMillisecond);

void BM_FitWarm(benchmark::State& state) {
  const int n = 60;
  auto log = make_log(n, 6, 31, 4);
  const RankingObservation last = log.back();
  log.pop_back();
  const auto previous = fit(log, n, FitOptions{}).state.u;
  log.push_back(last);
  for (auto _ : state) benchmark::DoNotOptimize(fit(log, n, FitOptions{}, previous));
}
BENCHMARK(BM_FitWarm)->Unit(benchmark::kMillisecond);

void BM_SelectQbc(benchmark::State& state) {
  const int n = 60;
  const auto log = make_log(n, 6, 20, 5);
  const UtilityState s = fit(log, n, FitOptions{}).state;
  Rng rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(select_qbc(s, 6, 16, 32, rng));
}
BENCHMARK(BM_SelectQbc)->Unit(benchmark::kMillisecond);

void BM_SelectMcKg(benchmark::State& state) {
  const int n = 60;
  const auto log = make_log(n, 6, 20, 7);
  const UtilityState s = fit(log, n, FitOptions{}).state;
  McKgOptions options;
  options.threads = static_cast<int>(state.range(0));
  Rng rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(select_mckg(s, log, 6, options, rng));
}
BENCHMARK(BM_SelectMcKg)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace listrank

BENCHMARK_MAIN();
