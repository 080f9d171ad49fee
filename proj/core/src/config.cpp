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

#include "listrank/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "listrank/errors.hpp"

namespace listrank {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kUniform: return "uniform";
    case Strategy::kVarianceTopK: return "variance_topk";
    case Strategy::kBoundary: return "boundary";
    case Strategy::kQbc: return "qbc";
    case Strategy::kMcKg: return "mckg";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "uniform") return Strategy::kUniform;
  if (name == "variance_topk") return Strategy::kVarianceTopK;
  if (name == "boundary" || name == "kl_ucb") return Strategy::kBoundary;
  if (name == "qbc") return Strategy::kQbc;
  if (name == "mckg") return Strategy::kMcKg;
  throw ConfigError("unknown strategy " + std::string(name));
}

std::string_view to_string(JudgeKind kind) {
  switch (kind) {
    case JudgeKind::kPlackettLuce: return "pl";
    case JudgeKind::kSwapNoise: return "swap";
    case JudgeKind::kExternal: return "external";
    case JudgeKind::kInteractive: return "interactive";
  }
  return "unknown";
}

JudgeKind parse_judge_kind(std::string_view name) {
  if (name == "pl") return JudgeKind::kPlackettLuce;
  if (name == "swap") return JudgeKind::kSwapNoise;
  if (name == "external") return JudgeKind::kExternal;
  if (name == "interactive") return JudgeKind::kInteractive;
  throw ConfigError("unknown judge " + std::string(name));
}

int cutoff_count(double fraction, int n) {
  // 1e-9 absorbs representation error in fraction * n.
  return static_cast<int>(std::ceil(fraction * n - 1e-9));
}

std::vector<ConfigViolation> validate_config(const TournamentConfig& config) {
  std::vector<ConfigViolation> out;
  auto add = [&out](std::string field, std::string message) {
    out.push_back({std::move(field), std::move(message)});
  };
  const int n = config.n_candidates;
  if (n < 2) add("n_candidates", "pool needs at least 2 candidates");
  if (config.subset_size < 2) add("subset_size", "subset_size below 2");
  if (config.subset_size > n) add("subset_size", "subset_size exceeds pool");
  if (config.iterations < 0) add("iterations", "iterations is negative");
  if (!(config.lambda >= 0.0) || !std::isfinite(config.lambda)) {
    add("lambda", "lambda must be a finite non-negative number");
  }
  if (!(config.fit_tolerance > 0.0)) {
    add("fit_tolerance", "fit_tolerance must be positive");
  }
  if (config.max_fit_steps < 1) {
    add("max_fit_steps", "max_fit_steps must be positive");
  }
  if (config.cutoffs.empty()) add("cutoffs", "cutoffs is empty");
  for (double p : config.cutoffs) {
    if (!(p > 0.0 && p <= 1.0)) {
      add("cutoffs", "cutoff outside (0, 1]");
    } else if (n >= 1 && cutoff_count(p, n) < 1) {
      add("cutoffs", "cutoff selects no items");
    }
  }
  if (!std::is_sorted(config.cutoffs.begin(), config.cutoffs.end()) ||
      std::adjacent_find(config.cutoffs.begin(), config.cutoffs.end()) !=
          config.cutoffs.end()) {
    add("cutoffs", "cutoffs not ascending");
  }
  if (!(config.shortlist_fraction > 0.0 && config.shortlist_fraction < 1.0)) {
    add("shortlist_fraction", "shortlist_fraction outside (0, 1)");
  } else if (config.strategy == Strategy::kBoundary && n >= 2) {
    const int c = cutoff_count(config.shortlist_fraction, n);
    if (c < 1 || c >= n) {
      add("shortlist_fraction", "shortlist boundary falls outside the pool");
    }
  }
  if (config.qbc_committee < 1) add("qbc_committee", "qbc_committee below 1");
  if (config.proposal_pool < 1) add("proposal_pool", "proposal_pool below 1");
  if (config.mckg_rollouts < 1) add("mckg_rollouts", "mckg_rollouts below 1");

  const JudgeSpec& judge = config.judge;
  if (judge.kind == JudgeKind::kPlackettLuce && !(judge.beta >= 0.0)) {
    add("judge.beta", "beta must be non-negative");
  }
  if (judge.kind == JudgeKind::kSwapNoise &&
      !(judge.p_swap >= 0.0 && judge.p_swap <= 1.0)) {
    add("judge.p_swap", "p_swap outside [0, 1]");
  }
  if (judge.kind == JudgeKind::kExternal && judge.command.empty()) {
    add("judge.command", "external judge needs a command");
  }
  if (judge.retries < 0) add("judge.retries", "retries is negative");
  if (judge.timeout_ms < 1) add("judge.timeout_ms", "timeout_ms must be positive");

  const EarlyStopping& stop = config.early_stopping;
  if (stop.window < 1) add("early_stopping.window", "window below 1");
  return out;
}

}  // namespace listrank
