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

#include "listrank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "listrank/config.hpp"
#include "listrank/errors.hpp"
#include "listrank/pl_engine.hpp"

namespace listrank {
namespace {

void check_same_items(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw StructuralError("rankings have different lengths");
  }
  std::vector<int> sa(a.begin(), a.end());
  std::vector<int> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (std::adjacent_find(sa.begin(), sa.end()) != sa.end()) {
    throw StructuralError("ranking repeats an item");
  }
  if (sa != sb) throw StructuralError("rankings rank different item sets");
}

}  // namespace

double kendall_tau(std::span<const int> r1, std::span<const int> r2) {
  check_same_items(r1, r2);
  const std::size_t n = r1.size();
  if (n < 2) throw StructuralError("kendall tau needs at least 2 items");
  std::unordered_map<int, std::size_t> pos2;
  for (std::size_t i = 0; i < n; ++i) pos2.emplace(r2[i], i);
  std::vector<std::size_t> mapped(n);
  for (std::size_t i = 0; i < n; ++i) mapped[i] = pos2.at(r1[i]);
  long long concordant = 0;
  long long discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (mapped[i] < mapped[j]) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

double ndcg_at(std::span<const int> predicted, std::span<const int> reference,
               double p) {
  check_same_items(predicted, reference);
  const int n = static_cast<int>(reference.size());
  const int c = cutoff_count(p, n);
  if (c < 1 || c > n) {
    throw StructuralError("ndcg depth " + std::to_string(c) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  const std::unordered_set<int> relevant(reference.begin(), reference.begin() + c);
  double dcg = 0.0;
  double idcg = 0.0;
  for (int j = 1; j <= c; ++j) {
    const double discount = 1.0 / std::log2(j + 1.0);
    if (relevant.contains(predicted[j - 1])) dcg += discount;
    idcg += discount;
  }
  return dcg / idcg;
}

double delta_u(std::span<const double> current, std::span<const double> previous) {
  if (current.size() != previous.size()) {
    throw StructuralError("utility vectors differ in length");
  }
  double sq = 0.0;
  for (std::size_t i = 0; i < current.size(); ++i) {
    const double d = current[i] - previous[i];
    sq += d * d;
  }
  return std::sqrt(sq);
}

double delta_u(const UtilityState& current, const UtilityState& previous) {
  return delta_u(current.u, previous.u);
}

std::vector<double> normalize_series(std::span<const double> values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - *lo) / range;
  }
  return out;
}

MetricsRecord compute_metrics(const UtilityState& state,
                              const UtilityState& previous,
                              std::span<const int> reference,
                              std::span<const double> cutoffs) {
  MetricsRecord record;
  record.iteration = state.iteration;
  const std::vector<int> order = argsort_descending(state.u);
  if (state.iteration > 1) {
    record.kendall_tau_successive =
        kendall_tau(order, argsort_descending(previous.u));
  }
  record.delta_u = delta_u(state, previous);
  if (!reference.empty()) {
    for (double p : cutoffs) record.ndcg[p] = ndcg_at(order, reference, p);
    record.kendall_tau_vs_reference = kendall_tau(order, reference);
  }
  return record;
}

}  // namespace listrank
