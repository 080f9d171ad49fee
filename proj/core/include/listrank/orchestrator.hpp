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

#ifndef LISTRANK_ORCHESTRATOR_HPP_
#define LISTRANK_ORCHESTRATOR_HPP_

// The active-learning loop. Each iteration:
//   1. select a subset with the configured strategy,
//   2. ask the judge to rank it and log one observation,
//   3. refit utilities warm-started from the previous state,
//   4. record convergence and quality metrics.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "listrank/acquisition.hpp"
#include "listrank/config.hpp"
#include "listrank/errors.hpp"
#include "listrank/judges.hpp"
#include "listrank/metrics.hpp"
#include "listrank/types.hpp"

namespace listrank {

struct RunArtifacts {
  TournamentConfig config;
  std::string pool_digest;
  std::vector<RankingObservation> observations;
  // Zero utilities with prior variances 1 / lambda.
  UtilityState initial_state;
  // One entry per completed iteration; states[t - 1].n_observations == t.
  std::vector<UtilityState> states;
  std::vector<MetricsRecord> metrics;
  bool stopped_early = false;
};

enum class RunStatus { kCompleted, kPartial, kFailed };

// Receives every record as soon as it exists, so a sink can persist progress
// before a failure propagates.
class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_start(const RunArtifacts& artifacts,
                        const CandidatePool& pool) = 0;
  virtual void on_iteration(const RunArtifacts& artifacts,
                            const Selection& selection) = 0;
  virtual void on_finish(const RunArtifacts& artifacts, RunStatus status) = 0;
};

// Instrumentation points, mainly for tests.
struct RunHooks {
  std::function<void(int iteration, std::span<const double> init)> on_fit_init;
};

// Raised when the judge fails mid-run; carries everything completed so far.
class RunFailure : public Error {
 public:
  RunFailure(const std::string& what, RunArtifacts partial)
      : Error(what), partial_(std::move(partial)) {}
  const RunArtifacts& partial() const { return partial_; }
  int completed_iterations() const {
    return static_cast<int>(partial_.states.size());
  }

 private:
  RunArtifacts partial_;
};

// Runs config.iterations rounds (fewer if early stopping is enabled and
// fires). reference, if non-empty, is a strongest-first ranking of all pool
// indices. All randomness comes from config.seed via named sub-streams.
// Throws ConfigError on an invalid config or incompatible judge and
// RunFailure on judge failure (after the observer has been notified).
RunArtifacts run(const TournamentConfig& config, const CandidatePool& pool,
                 Judge& judge, std::span<const int> reference = {},
                 RunObserver* observer = nullptr, const RunHooks& hooks = {});

// Recomputes the state sequence from a log without any judge or selection,
// using the same warm-start chain as run().
std::vector<UtilityState> replay(
    std::span<const RankingObservation> observations,
    const TournamentConfig& config, std::size_t n);

// True iff the last `window` records all have successive tau >= tau_threshold
// and delta_u <= du_threshold. A missing tau never satisfies the threshold.
bool stopping_check(std::span<const MetricsRecord> history, int window,
                    double tau_threshold, double du_threshold);

UtilityState initial_state(std::size_t n, double lambda);

}  // namespace listrank

#endif  // LISTRANK_ORCHESTRATOR_HPP_
