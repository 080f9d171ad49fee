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

#ifndef LISTRANK_RANDOM_HPP_
#define LISTRANK_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace listrank {

using Rng = std::mt19937_64;

// Named sub-streams derived from a run seed. Each consumer owns one stream so
// that, e.g., a different judge seed cannot perturb subset selection.
namespace streams {
inline constexpr std::string_view kSelection = "selection";
inline constexpr std::string_view kJudge = "judge";
inline constexpr std::string_view kRollouts = "rollouts";
inline constexpr std::string_view kPool = "pool";
}  // namespace streams

std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_index);

inline Rng make_rng(std::uint64_t seed, std::string_view stream) {
  return Rng(derive_seed(seed, stream));
}

}  // namespace listrank

#endif  // LISTRANK_RANDOM_HPP_
