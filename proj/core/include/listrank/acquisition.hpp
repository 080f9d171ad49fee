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

#ifndef LISTRANK_ACQUISITION_HPP_
#define LISTRANK_ACQUISITION_HPP_

// Strategies choosing the next K candidates to send to the judge.
//
// Every strategy returns K distinct indices sorted ascending. Deterministic
// strategies (variance_topk, boundary) take no rng. The sampling strategies
// consume their rng in this order:
//
//   uniform: one std::sample draw.
//   qbc:     R proposal draws, then C committee vectors of N standard
//            normals each, in index order.
//   mckg:    R proposal draws, then one 64-bit base seed. Rollout m of
//            proposal r runs on its own stream derive_seed(base, r * M + m),
//            so results do not depend on how rollouts are scheduled.

#include <span>
#include <vector>

#include "listrank/config.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/random.hpp"
#include "listrank/types.hpp"

namespace listrank {

struct ProposalSubset {
  std::vector<int> indices;
  double score = 0.0;

  bool operator==(const ProposalSubset&) const = default;
};

struct Selection {
  ProposalSubset chosen;
  // Every scored candidate subset, in draw order.
  std::vector<ProposalSubset> proposals;
};

// Throws StructuralError when k > n or k < 1.
std::vector<int> select_uniform(int n, int k, Rng& rng);

// The k largest variances, ties broken by lower index.
std::vector<int> select_variance_topk(const UtilityState& state, int k);

// With c = ceil(shortlist_fraction * N) and items ranked by u descending,
// picks the k items whose rank is closest to the boundary between ranks c and
// c + 1; ties go to larger variance, then lower index. Throws StructuralError
// unless 1 <= c < N.
std::vector<int> select_boundary(const UtilityState& state, int k,
                                 double shortlist_fraction);

// Mean pairwise normalized Kendall distance between the orderings of subset
// induced by each committee member. Zero for committees of one.
double committee_disagreement(std::span<const int> subset,
                              std::span<const std::vector<double>> committee);

Selection select_qbc(const UtilityState& state, int k, int committee,
                     int proposals, Rng& rng);

struct McKgOptions {
  int rollouts = 8;
  int proposals = 32;
  FitOptions fit;
  // Ascent steps allowed in each hypothetical refit.
  int refit_steps = 25;
  // Worker threads for rollouts; results are identical for any value.
  int threads = 1;
};

// Expected drop in total posterior variance from querying subset, estimated
// with options.rollouts draws on the streams derive_seed(base_seed,
// proposal_index * rollouts + m).
double knowledge_gradient(const UtilityState& state,
                          std::span<const RankingObservation> observations,
                          std::span<const int> subset,
                          const McKgOptions& options, std::uint64_t base_seed,
                          int proposal_index);

Selection select_mckg(const UtilityState& state,
                      std::span<const RankingObservation> observations, int k,
                      const McKgOptions& options, Rng& rng);

// Dispatches on config.strategy.
Selection select_subset(const TournamentConfig& config,
                        const UtilityState& state,
                        std::span<const RankingObservation> observations,
                        Rng& rng);

}  // namespace listrank

#endif  // LISTRANK_ACQUISITION_HPP_
