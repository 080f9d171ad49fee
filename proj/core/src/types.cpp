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

#include "listrank/types.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "listrank/errors.hpp"

namespace listrank {

CandidatePool::CandidatePool(std::vector<Candidate> candidates,
                             std::optional<std::string> rubric)
    : candidates_(std::move(candidates)), rubric_(std::move(rubric)) {
  if (candidates_.size() < 2) {
    throw StructuralError("a pool needs at least 2 candidates, got " +
                          std::to_string(candidates_.size()));
  }
  std::size_t with_utility = 0;
  index_.reserve(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    const Candidate& c = candidates_[i];
    if (c.id.empty()) {
      throw StructuralError("candidate " + std::to_string(i) + " has an empty id");
    }
    if (!index_.emplace(c.id, static_cast<int>(i)).second) {
      throw StructuralError("duplicate candidate id " + c.id);
    }
    if (c.true_utility.has_value()) ++with_utility;
  }
  if (with_utility != 0 && with_utility != candidates_.size()) {
    throw StructuralError(
        "true_utility must be present for all candidates or for none");
  }
}

int CandidatePool::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw LookupError(std::string(id));
  return it->second;
}

bool CandidatePool::is_synthetic() const {
  return candidates_.front().true_utility.has_value();
}

std::vector<double> CandidatePool::true_utilities() const {
  if (!is_synthetic()) {
    throw ConfigError("pool has no true utilities (not a synthetic pool)");
  }
  std::vector<double> out;
  out.reserve(candidates_.size());
  for (const auto& c : candidates_) out.push_back(*c.true_utility);
  return out;
}

void check_observation(const RankingObservation& obs, std::size_t n) {
  const std::size_t k = obs.subset.size();
  if (k < 2 || k > n) {
    throw StructuralError("observation subset size " + std::to_string(k) +
                          " outside [2, " + std::to_string(n) + "]");
  }
  if (obs.permutation.size() != k) {
    throw StructuralError("permutation length differs from subset size");
  }
  std::vector<int> a = obs.subset;
  std::vector<int> b = obs.permutation;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw StructuralError("observation subset has repeated indices");
  }
  if (a != b) {
    throw StructuralError("permutation is not a reordering of the subset");
  }
  if (a.front() < 0 || static_cast<std::size_t>(a.back()) >= n) {
    throw StructuralError("observation index out of range for pool of " +
                          std::to_string(n));
  }
}

void recenter(std::span<double> values) {
  if (values.empty()) return;
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                      static_cast<double>(values.size());
  for (double& v : values) v -= mean;
}

}  // namespace listrank
