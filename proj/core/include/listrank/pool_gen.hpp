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

#ifndef LISTRANK_POOL_GEN_HPP_
#define LISTRANK_POOL_GEN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "listrank/types.hpp"

namespace listrank {

// Synthetic utility generators:
//   normal:sd=S               u ~ Normal(0, S)
//   uniform:LO,HI             u ~ Uniform(LO, HI)
//   tiered:tiers=T,gap=G[,sd=S]
//       T equally sized tiers whose centres are G apart, each member jittered
//       by Normal(0, S) (S defaults to 0.5), tiers assigned at random.
struct UtilityGenerator {
  enum class Kind { kNormal, kUniform, kTiered };
  Kind kind = Kind::kNormal;
  double sd = 1.0;
  double lo = 0.0;
  double hi = 1.0;
  int tiers = 3;
  double gap = 2.0;
};

// Throws ConfigError on unknown kinds or bad parameters.
UtilityGenerator parse_utility_generator(std::string_view spec);

std::vector<double> generate_utilities(const UtilityGenerator& gen, int n,
                                       std::uint64_t seed);

// Ids c000, c001, ...; labels "Candidate N".
CandidatePool synthesize_pool(const UtilityGenerator& gen, int n,
                              std::uint64_t seed);

}  // namespace listrank

#endif  // LISTRANK_POOL_GEN_HPP_
