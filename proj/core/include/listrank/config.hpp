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

#ifndef LISTRANK_CONFIG_HPP_
#define LISTRANK_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace listrank {

enum class Strategy { kUniform, kVarianceTopK, kBoundary, kQbc, kMcKg };

std::string_view to_string(Strategy strategy);
// Accepts the canonical names plus "kl_ucb", an alias for boundary.
// Throws ConfigError on anything else.
Strategy parse_strategy(std::string_view name);

enum class JudgeKind { kPlackettLuce, kSwapNoise, kExternal, kInteractive };

std::string_view to_string(JudgeKind kind);
JudgeKind parse_judge_kind(std::string_view name);

struct JudgeSpec {
  JudgeKind kind = JudgeKind::kPlackettLuce;
  // Plackett-Luce inverse temperature; +inf gives the noiseless order.
  double beta = 1.0;
  double p_swap = 0.1;
  std::vector<std::string> command;
  int retries = 2;
  int timeout_ms = 30000;
  // Overrides the judge stream derived from the run seed.
  std::optional<std::uint64_t> seed;
};

struct EarlyStopping {
  bool enabled = false;
  int window = 5;
  double tau_threshold = 0.99;
  double du_threshold = 1e-3;
};

struct TournamentConfig {
  int n_candidates = 60;
  int subset_size = 6;
  int iterations = 30;
  Strategy strategy = Strategy::kMcKg;
  JudgeSpec judge;
  std::uint64_t seed = 0;
  double lambda = 0.1;
  double fit_tolerance = 1e-6;
  int max_fit_steps = 500;
  std::vector<double> cutoffs = {0.10, 0.15, 0.20, 0.25};
  double shortlist_fraction = 0.25;
  int qbc_committee = 16;
  int proposal_pool = 32;
  int mckg_rollouts = 8;
  bool prior_ordering_in_prompt = false;
  EarlyStopping early_stopping;
  // Write per-iteration acquisition scores to diagnostics.jsonl.
  bool dump_diagnostics = false;
};

struct ConfigViolation {
  std::string field;
  std::string message;
};

// Empty iff every invariant holds. Violations are data, never thrown.
std::vector<ConfigViolation> validate_config(const TournamentConfig& config);

// Number of items in the top p fraction of n, i.e. ceil(p * n), computed so
// that products like 0.15 * 20 do not round up past the exact value.
int cutoff_count(double fraction, int n);

}  // namespace listrank

#endif  // LISTRANK_CONFIG_HPP_
