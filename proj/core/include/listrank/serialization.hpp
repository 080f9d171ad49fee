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

#ifndef LISTRANK_SERIALIZATION_HPP_
#define LISTRANK_SERIALIZATION_HPP_

// JSON encodings of the domain types. Field order is fixed (ordered_json) so
// the canonical encodings are byte-reproducible. On disk, candidates are
// referred to by id; conversion to dense indices happens here.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "listrank/config.hpp"
#include "listrank/types.hpp"

namespace listrank {

using Json = nlohmann::ordered_json;

// Pool file: {"rubric": str|null, "candidates": [{"id","label","dossier",
// "true_utility"}]}.
Json pool_to_json(const CandidatePool& pool);
CandidatePool pool_from_json(const Json& json);
CandidatePool load_pool(const std::string& path);

Json config_to_json(const TournamentConfig& config);
// Missing fields keep their defaults; present fields override them.
TournamentConfig config_from_json(const Json& json,
                                  TournamentConfig base = {});

// One line of observations.jsonl, without the trailing newline:
// {"iteration","subset","permutation","judge_tag","wall_time_ms"}.
std::string encode_observation(const RankingObservation& obs,
                               const CandidatePool& pool);
// Throws ParseError (with line) for malformed JSON or ids absent from the pool.
RankingObservation decode_observation(std::string_view line,
                                      const CandidatePool& pool,
                                      std::size_t line_number = 0);
std::vector<RankingObservation> read_observation_log(
    std::istream& in, const CandidatePool& pool);

// {"iteration","u","sigma2","n_observations"}, vectors in pool order.
std::string encode_state(const UtilityState& state);
UtilityState decode_state(std::string_view line, std::size_t line_number = 0);
std::vector<UtilityState> read_states(std::istream& in);

}  // namespace listrank

#endif  // LISTRANK_SERIALIZATION_HPP_
