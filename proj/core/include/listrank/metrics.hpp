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

#ifndef LISTRANK_METRICS_HPP_
#define LISTRANK_METRICS_HPP_

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "listrank/types.hpp"

namespace listrank {

struct MetricsRecord {
  int iteration = 0;
  // Absent at the first iteration.
  std::optional<double> kendall_tau_successive;
  double delta_u = 0.0;
  // Keyed by cutoff fraction; empty when there is no reference ranking.
  std::map<double, double> ndcg;
  std::optional<double> kendall_tau_vs_reference;
};

// Rankings are item lists, strongest first. Throws StructuralError unless
// both are permutations of the same n >= 2 items.
double kendall_tau(std::span<const int> r1, std::span<const int> r2);

// Binary-relevance NDCG at depth c = ceil(p * N): an item is relevant iff it
// sits in the reference top c. Throws StructuralError if c < 1 or the item
// sets differ.
double ndcg_at(std::span<const int> predicted, std::span<const int> reference,
               double p);

// Euclidean norm of current - previous. Fitted states are already centered.
double delta_u(std::span<const double> current, std::span<const double> previous);
double delta_u(const UtilityState& current, const UtilityState& previous);

// Min-max scaling to [0, 1]; constant (and singleton) series map to zeros.
std::vector<double> normalize_series(std::span<const double> values);

// All (winner, loser) pairs implied by a ranking: K(K-1)/2 of them.
template <typename T>
std::vector<std::pair<T, T>> pairwise_expansion(std::span<const T> ranking) {
  std::vector<std::pair<T, T>> pairs;
  pairs.reserve(ranking.size() * (ranking.size() - 1) / 2);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    for (std::size_t j = i + 1; j < ranking.size(); ++j) {
      pairs.emplace_back(ranking[i], ranking[j]);
    }
  }
  return pairs;
}

// Metrics for state against previous; reference (strongest first) enables the
// NDCG and tau-vs-reference fields.
MetricsRecord compute_metrics(const UtilityState& state,
                              const UtilityState& previous,
                              std::span<const int> reference,
                              std::span<const double> cutoffs);

}  // namespace listrank

#endif  // LISTRANK_METRICS_HPP_
