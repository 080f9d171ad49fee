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

#include "listrank/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "listrank/errors.hpp"

namespace listrank {
namespace {

void check_k(int n, int k) {
  if (k < 1 || k > n) {
    throw StructuralError("subset size " + std::to_string(k) +
                          " outside [1, " + std::to_string(n) + "]");
  }
}

std::vector<int> take_sorted(const std::vector<int>& order, int k) {
  std::vector<int> out(order.begin(), order.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

// u + sqrt(sigma2) * z with z drawn in index order.
std::vector<double> sample_posterior(const UtilityState& state, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(state.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = state.u[i] + std::sqrt(state.sigma2[i]) * normal(rng);
  }
  return out;
}

// Position of each subset member in the ordering induced by values
// (descending, ties by lower index).
std::vector<int> positions(std::span<const int> subset,
                           std::span<const double> values) {
  std::vector<int> order(subset.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double va = values[subset[a]];
    const double vb = values[subset[b]];
    return va > vb || (va == vb && subset[a] < subset[b]);
  });
  std::vector<int> pos(subset.size());
  for (std::size_t r = 0; r < order.size(); ++r) pos[order[r]] = static_cast<int>(r);
  return pos;
}

std::size_t argmax_first(const std::vector<ProposalSubset>& proposals) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < proposals.size(); ++i) {
    if (proposals[i].score > proposals[best].score) best = i;
  }
  return best;
}

Selection single(std::vector<int> indices, double score) {
  Selection s;
  s.chosen = {std::move(indices), score};
  s.proposals = {s.chosen};
  return s;
}

}  // namespace

std::vector<int> select_uniform(int n, int k, Rng& rng) {
  check_k(n, k);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> out;
  out.reserve(k);
  std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> select_variance_topk(const UtilityState& state, int k) {
  check_k(static_cast<int>(state.size()), k);
  std::vector<int> order(state.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return state.sigma2[a] > state.sigma2[b];
  });
  return take_sorted(order, k);
}

std::vector<int> select_boundary(const UtilityState& state, int k,
                                 double shortlist_fraction) {
  const int n = static_cast<int>(state.size());
  check_k(n, k);
  const int c = cutoff_count(shortlist_fraction, n);
  if (c < 1 || c >= n) {
    throw StructuralError("shortlist boundary " + std::to_string(c) +
                          " outside [1, " + std::to_string(n) + ")");
  }
  const std::vector<int> by_utility = argsort_descending(state.u);
  std::vector<double> distance(n);
  for (int r = 0; r < n; ++r) {
    // 1-based rank r + 1 against the boundary between ranks c and c + 1.
    distance[by_utility[r]] = std::abs((r + 1) - (c + 0.5));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (distance[a] != distance[b]) return distance[a] < distance[b];
    if (state.sigma2[a] != state.sigma2[b]) return state.sigma2[a] > state.sigma2[b];
    return a < b;
  });
  return take_sorted(order, k);
}

double committee_disagreement(std::span<const int> subset,
                              std::span<const std::vector<double>> committee) {
  if (committee.size() < 2 || subset.size() < 2) return 0.0;
  std::vector<std::vector<int>> pos;
  pos.reserve(committee.size());
  for (const auto& member : committee) pos.push_back(positions(subset, member));
  const std::size_t k = subset.size();
  const double pairs = static_cast<double>(k * (k - 1) / 2);
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      int discordant = 0;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = x + 1; y < k; ++y) {
          const bool in_a = pos[a][x] < pos[a][y];
          const bool in_b = pos[b][x] < pos[b][y];
          if (in_a != in_b) ++discordant;
        }
      }
      total += discordant / pairs;
      ++count;
    }
  }
  return total / static_cast<double>(count);
}

Selection select_qbc(const UtilityState& state, int k, int committee,
                     int proposals, Rng& rng) {
  if (committee < 1 || proposals < 1) {
    throw StructuralError("qbc needs a committee and proposals of at least 1");
  }
  const int n = static_cast<int>(state.size());
  Selection s;
  for (int r = 0; r < proposals; ++r) {
    s.proposals.push_back({select_uniform(n, k, rng), 0.0});
  }
  std::vector<std::vector<double>> members;
  members.reserve(committee);
  for (int c = 0; c < committee; ++c) members.push_back(sample_posterior(state, rng));
  for (auto& p : s.proposals) p.score = committee_disagreement(p.indices, members);
  s.chosen = s.proposals[argmax_first(s.proposals)];
  return s;
}

double knowledge_gradient(const UtilityState& state,
                          std::span<const RankingObservation> observations,
                          std::span<const int> subset,
                          const McKgOptions& options, std::uint64_t base_seed,
                          int proposal_index) {
  if (options.rollouts < 1) throw StructuralError("mckg needs rollouts >= 1");
  const std::size_t n = state.size();
  const double before =
      std::accumulate(state.sigma2.begin(), state.sigma2.end(), 0.0);

  std::vector<RankingObservation> augmented(observations.begin(),
                                            observations.end());
  augmented.push_back({});
  RankingObservation& hypothetical = augmented.back();
  hypothetical.iteration = state.iteration + 1;
  hypothetical.subset.assign(subset.begin(), subset.end());
  hypothetical.judge_tag = "rollout";

  FitOptions refit = options.fit;
  refit.max_steps = options.refit_steps;

  double total = 0.0;
  for (int m = 0; m < options.rollouts; ++m) {
    const auto stream = static_cast<std::uint64_t>(proposal_index) *
                            static_cast<std::uint64_t>(options.rollouts) +
                        static_cast<std::uint64_t>(m);
    Rng rng(derive_seed(base_seed, stream));
    const std::vector<double> draw = sample_posterior(state, rng);
    hypothetical.permutation = sample_ranking(draw, subset, 1.0, rng);
    const FitReport report = fit(augmented, n, refit, state.u);
    const double after = std::accumulate(report.state.sigma2.begin(),
                                         report.state.sigma2.end(), 0.0);
    total += before - after;
  }
  return total / options.rollouts;
}

Selection select_mckg(const UtilityState& state,
                      std::span<const RankingObservation> observations, int k,
                      const McKgOptions& options, Rng& rng) {
  if (options.rollouts < 1 || options.proposals < 1) {
    throw StructuralError("mckg needs rollouts and proposals of at least 1");
  }
  const int n = static_cast<int>(state.size());
  Selection s;
  for (int r = 0; r < options.proposals; ++r) {
    s.proposals.push_back({select_uniform(n, k, rng), 0.0});
  }
  const std::uint64_t base_seed = rng();

  auto score_range = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t r = begin; r < s.proposals.size(); r += stride) {
      s.proposals[r].score =
          knowledge_gradient(state, observations, s.proposals[r].indices,
                             options, base_seed, static_cast<int>(r));
    }
  };
  const std::size_t threads = static_cast<std::size_t>(
      std::clamp(options.threads, 1, options.proposals));
  if (threads == 1) {
    score_range(0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back(score_range, t, threads);
    }
  }
  s.chosen = s.proposals[argmax_first(s.proposals)];
  return s;
}

Selection select_subset(const TournamentConfig& config,
                        const UtilityState& state,
                        std::span<const RankingObservation> observations,
                        Rng& rng) {
  const int n = static_cast<int>(state.size());
  const int k = config.subset_size;
  switch (config.strategy) {
    case Strategy::kUniform:
      return single(select_uniform(n, k, rng), 0.0);
    case Strategy::kVarianceTopK: {
      std::vector<int> idx = select_variance_topk(state, k);
      double score = 0.0;
      for (int i : idx) score += state.sigma2[i];
      return single(std::move(idx), score);
    }
    case Strategy::kBoundary:
      return single(select_boundary(state, k, config.shortlist_fraction), 0.0);
    case Strategy::kQbc:
      return select_qbc(state, k, config.qbc_committee, config.proposal_pool,
                        rng);
    case Strategy::kMcKg: {
      McKgOptions options;
      options.rollouts = config.mckg_rollouts;
      options.proposals = config.proposal_pool;
      options.fit = {config.lambda, config.fit_tolerance, config.max_fit_steps};
      return select_mckg(state, observations, k, options, rng);
    }
  }
  throw ConfigError("unknown strategy");
}

}  // namespace listrank
