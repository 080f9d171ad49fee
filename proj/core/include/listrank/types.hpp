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

#ifndef LISTRANK_TYPES_HPP_
#define LISTRANK_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace listrank {

// An item to be ranked. dossier is handed verbatim to judges and never
// inspected; true_utility is only present in synthetic pools.
struct Candidate {
  std::string id;
  std::string label;
  std::optional<std::string> dossier;
  std::optional<double> true_utility;

  bool operator==(const Candidate&) const = default;
};

// Ordered, immutable collection of candidates. Position in the pool is the
// dense index used by all numerical code; ids only appear at I/O boundaries.
class CandidatePool {
 public:
  // Throws StructuralError when fewer than two candidates are given, an id is
  // empty or duplicated, or true utilities are present for only some
  // candidates.
  explicit CandidatePool(std::vector<Candidate> candidates,
                         std::optional<std::string> rubric = std::nullopt);

  std::size_t size() const { return candidates_.size(); }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  const Candidate& candidate(std::size_t index) const {
    return candidates_.at(index);
  }
  const std::optional<std::string>& rubric() const { return rubric_; }

  // Throws LookupError("unknown id <id>").
  int index_of(std::string_view id) const;
  const std::string& id_of(std::size_t index) const {
    return candidates_.at(index).id;
  }

  bool is_synthetic() const;
  // Throws ConfigError for real (non-synthetic) pools.
  std::vector<double> true_utilities() const;

 private:
  std::vector<Candidate> candidates_;
  std::optional<std::string> rubric_;
  std::unordered_map<std::string, int> index_;
};

// One tournament: the queried subset and the judge's ordering of it,
// strongest first. Indices are dense pool indices.
struct RankingObservation {
  int iteration = 0;
  std::vector<int> subset;
  std::vector<int> permutation;
  std::string judge_tag;
  std::int64_t wall_time_ms = 0;

  bool operator==(const RankingObservation&) const = default;
};

// Throws StructuralError unless permutation reorders subset exactly, every
// index is in [0, n) and 2 <= K <= n.
void check_observation(const RankingObservation& obs, std::size_t n);

// Global utility vector (zero-sum gauge) with its diagonal Laplace variances.
struct UtilityState {
  std::vector<double> u;
  std::vector<double> sigma2;
  int iteration = 0;
  int n_observations = 0;

  std::size_t size() const { return u.size(); }
  bool operator==(const UtilityState&) const = default;
};

// Shifts values so they sum to zero.
void recenter(std::span<double> values);

}  // namespace listrank

#endif  // LISTRANK_TYPES_HPP_
