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

#include "listrank/orchestrator.hpp"

#include <algorithm>
#include <chrono>

#include "listrank/pl_engine.hpp"
#include "listrank/random.hpp"
#include "listrank/run_io.hpp"

namespace listrank {
namespace {

JudgeRequest build_request(int iteration, const CandidatePool& pool,
                           std::span<const int> subset,
                           const UtilityState* prior) {
  JudgeRequest request;
  request.iteration = iteration;
  request.rubric = pool.rubric();
  for (int i : subset) {
    const Candidate& c = pool.candidate(i);
    request.candidates.push_back({c.id, c.label, c.dossier});
  }
  if (prior != nullptr) {
    std::vector<int> order(subset.begin(), subset.end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return prior->u[a] > prior->u[b];
    });
    std::vector<std::string> ids;
    for (int i : order) ids.push_back(pool.id_of(i));
    request.prior_ordering = std::move(ids);
  }
  return request;
}

FitOptions fit_options(const TournamentConfig& config) {
  return {config.lambda, config.fit_tolerance, config.max_fit_steps};
}

void check_reference(std::span<const int> reference, std::size_t n) {
  if (reference.empty()) return;
  std::vector<int> sorted(reference.begin(), reference.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != n || sorted[i] != static_cast<int>(i)) {
      throw ConfigError("reference ranking must order every pool candidate once");
    }
  }
}

}  // namespace

UtilityState initial_state(std::size_t n, double lambda) {
  UtilityState state;
  state.u.assign(n, 0.0);
  state.sigma2 = laplace_variances(state.u, {}, lambda);
  return state;
}

RunArtifacts run(const TournamentConfig& config, const CandidatePool& pool,
                 Judge& judge, std::span<const int> reference,
                 RunObserver* observer, const RunHooks& hooks) {
  if (static_cast<std::size_t>(config.n_candidates) != pool.size()) {
    throw ConfigError("config.n_candidates (" +
                      std::to_string(config.n_candidates) +
                      ") differs from pool size (" +
                      std::to_string(pool.size()) + ")");
  }
  if (auto violations = validate_config(config); !violations.empty()) {
    std::string msg = "invalid config:";
    for (const auto& v : violations) msg += " " + v.field + ": " + v.message + ";";
    throw ConfigError(msg);
  }
  if (!(config.lambda > 0.0)) {
    throw ConfigError("a run needs lambda > 0 so unobserved candidates have "
                      "finite variance");
  }
  check_reference(reference, pool.size());

  const std::size_t n = pool.size();
  RunArtifacts artifacts;
  artifacts.config = config;
  artifacts.pool_digest = pool_digest(pool);
  artifacts.initial_state = initial_state(n, config.lambda);
  if (observer) observer->on_start(artifacts, pool);

  Rng selection_rng = make_rng(config.seed, streams::kSelection);
  const FitOptions options = fit_options(config);
  const UtilityState* current = &artifacts.initial_state;

  try {
    for (int t = 1; t <= config.iterations; ++t) {
      const Selection selection =
          select_subset(config, *current, artifacts.observations, selection_rng);
      const JudgeRequest request =
          build_request(t, pool, selection.chosen.indices,
                        config.prior_ordering_in_prompt ? current : nullptr);

      const auto start = std::chrono::steady_clock::now();
      JudgeResponse response;
      try {
        response = judge_rank(judge, request);
      } catch (const JudgeFailure& e) {
        if (observer) observer->on_finish(artifacts, RunStatus::kPartial);
        std::string what = "iteration " + std::to_string(t) + ": " + e.what();
        if (!e.diagnostics().empty()) what += " (" + e.diagnostics() + ")";
        throw RunFailure(what, artifacts);
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);

      RankingObservation obs;
      obs.iteration = t;
      obs.subset = selection.chosen.indices;
      for (const auto& id : response.ranking) {
        obs.permutation.push_back(pool.index_of(id));
      }
      obs.judge_tag = judge.tag();
      obs.wall_time_ms = judge.reports_wall_time() ? elapsed.count() : 0;
      artifacts.observations.push_back(std::move(obs));

      if (hooks.on_fit_init) hooks.on_fit_init(t, current->u);
      FitReport report = fit(artifacts.observations, n, options, current->u);
      report.state.iteration = t;
      artifacts.metrics.push_back(
          compute_metrics(report.state, *current, reference, config.cutoffs));
      artifacts.states.push_back(std::move(report.state));
      current = &artifacts.states.back();
      if (observer) observer->on_iteration(artifacts, selection);

      const EarlyStopping& stop = config.early_stopping;
      if (stop.enabled && stopping_check(artifacts.metrics, stop.window,
                                         stop.tau_threshold, stop.du_threshold)) {
        artifacts.stopped_early = true;
        break;
      }
    }
  } catch (const RunFailure&) {
    throw;
  } catch (...) {
    if (observer) observer->on_finish(artifacts, RunStatus::kFailed);
    throw;
  }
  if (observer) observer->on_finish(artifacts, RunStatus::kCompleted);
  return artifacts;
}

std::vector<UtilityState> replay(
    std::span<const RankingObservation> observations,
    const TournamentConfig& config, std::size_t n) {
  const FitOptions options = fit_options(config);
  std::vector<UtilityState> states;
  states.reserve(observations.size());
  UtilityState previous = initial_state(n, config.lambda);
  for (std::size_t t = 1; t <= observations.size(); ++t) {
    FitReport report = fit(observations.first(t), n, options, previous.u);
    report.state.iteration = static_cast<int>(t);
    previous = report.state;
    states.push_back(std::move(report.state));
  }
  return states;
}

bool stopping_check(std::span<const MetricsRecord> history, int window,
                    double tau_threshold, double du_threshold) {
  if (window < 1) throw StructuralError("stopping window must be >= 1");
  if (history.size() < static_cast<std::size_t>(window)) return false;
  for (const auto& record : history.last(static_cast<std::size_t>(window))) {
    if (!record.kendall_tau_successive ||
        *record.kendall_tau_successive < tau_threshold) {
      return false;
    }
    if (record.delta_u > du_threshold) return false;
  }
  return true;
}

}  // namespace listrank
