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

#include <gtest/gtest.h>

#include "listrank/config.hpp"
#include "listrank/errors.hpp"
#include "listrank/pool_gen.hpp"
#include "listrank/types.hpp"
#include "test_support.hpp"

namespace listrank {
namespace {

using testing::make_pool;

bool has_violation(const std::vector<ConfigViolation>& violations,
                   const std::string& message) {
  for (const auto& v : violations) {
    if (v.message == message) return true;
  }
  return false;
}

TEST(ValidateConfig, SubsetLargerThanPool) {
  TournamentConfig config;
  config.n_candidates = 5;
  config.subset_size = 6;
  const auto violations = validate_config(config);
  ASSERT_TRUE(has_violation(violations, "subset_size exceeds pool"));
  for (const auto& v : violations) {
    if (v.message == "subset_size exceeds pool") EXPECT_EQ(v.field, "subset_size");
  }
}

TEST(ValidateConfig, ExperimentShapeIsValid) {
  TournamentConfig config;
  config.n_candidates = 60;
  config.subset_size = 6;
  config.iterations = 30;
  config.cutoffs = {0.10, 0.15, 0.20, 0.25};
  EXPECT_TRUE(validate_config(config).empty());
}

TEST(ValidateConfig, CutoffsMustAscend) {
  TournamentConfig config;
  config.cutoffs = {0.25, 0.10};
  const auto violations = validate_config(config);
  EXPECT_TRUE(has_violation(violations, "cutoffs not ascending"));
}

TEST(ValidateConfig, EveryViolationNamesAField) {
  TournamentConfig config;
  config.n_candidates = 1;
  config.subset_size = 1;
  config.lambda = -1.0;
  config.fit_tolerance = 0.0;
  config.max_fit_steps = 0;
  config.cutoffs = {1.5};
  config.shortlist_fraction = 1.0;
  config.qbc_committee = 0;
  const auto violations = validate_config(config);
  EXPECT_GE(violations.size(), 7u);
  for (const auto& v : violations) EXPECT_FALSE(v.field.empty());
}

TEST(ConfigDefaults, MatchExperimentShape) {
  const TournamentConfig config;
  EXPECT_EQ(config.iterations, 30);
  EXPECT_EQ(config.cutoffs, (std::vector<double>{0.10, 0.15, 0.20, 0.25}));
  EXPECT_GE(config.subset_size, 5);
  EXPECT_LE(config.subset_size, 10);
  EXPECT_DOUBLE_EQ(config.lambda, 0.1);
  EXPECT_EQ(config.qbc_committee, 16);
  EXPECT_EQ(config.proposal_pool, 32);
  EXPECT_EQ(config.mckg_rollouts, 8);
  EXPECT_FALSE(config.early_stopping.enabled);
  EXPECT_TRUE(validate_config(config).empty());
}

TEST(Strategy, NamesRoundTripAndAlias) {
  for (Strategy s : {Strategy::kUniform, Strategy::kVarianceTopK, Strategy::kBoundary,
                     Strategy::kQbc, Strategy::kMcKg}) {
    EXPECT_EQ(parse_strategy(to_string(s)), s);
  }
  EXPECT_EQ(parse_strategy("kl_ucb"), Strategy::kBoundary);
  EXPECT_THROW(parse_strategy("thompson"), ConfigError);
}

TEST(CutoffCount, CeilingOfFraction) {
  EXPECT_EQ(cutoff_count(0.10, 60), 6);
  EXPECT_EQ(cutoff_count(0.15, 60), 9);
  EXPECT_EQ(cutoff_count(0.2, 10), 2);
  EXPECT_EQ(cutoff_count(0.25, 30), 8);
  EXPECT_EQ(cutoff_count(0.10, 20), 2);
  EXPECT_EQ(cutoff_count(1.0, 7), 7);
}

TEST(CandidatePool, IndexOf) {
  const CandidatePool pool({{"a", "A"}, {"b", "B"}, {"c", "C"}});
  EXPECT_EQ(pool.index_of("b"), 1);
  try {
    pool.index_of("z");
    FAIL() << "expected LookupError";
  } catch (const LookupError& e) {
    EXPECT_STREQ(e.what(), "unknown id z");
    EXPECT_EQ(e.id(), "z");
  }
}

TEST(CandidatePool, IndexIdBijection) {
  const CandidatePool pool = make_pool({0.3, 1.0, -2.0, 4.0, 0.0, 0.5, 9.0});
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_EQ(pool.index_of(pool.id_of(i)), static_cast<int>(i));
  }
}

TEST(CandidatePool, RejectsBadPools) {
  EXPECT_THROW(CandidatePool(std::vector<Candidate>{{"a", "A"}}), StructuralError);
  EXPECT_THROW(CandidatePool({{"a", "A"}, {"a", "B"}}), StructuralError);
  EXPECT_THROW(CandidatePool({{"a", "A"}, {"", "B"}}), StructuralError);
  EXPECT_THROW(CandidatePool({{"a", "A", std::nullopt, 1.0}, {"b", "B"}}),
               StructuralError);
}

TEST(CandidatePool, TrueUtilitiesRequireSyntheticPool) {
  const CandidatePool real({{"a", "A"}, {"b", "B"}});
  EXPECT_FALSE(real.is_synthetic());
  EXPECT_THROW(real.true_utilities(), ConfigError);
  const CandidatePool synthetic = make_pool({1.0, 2.0});
  EXPECT_TRUE(synthetic.is_synthetic());
  EXPECT_EQ(synthetic.true_utilities(), (std::vector<double>{1.0, 2.0}));
}

TEST(CheckObservation, AcceptsReorderedSubset) {
  RankingObservation obs;
  obs.subset = {1, 3, 4};
  obs.permutation = {4, 1, 3};
  EXPECT_NO_THROW(check_observation(obs, 5));
}

TEST(CheckObservation, RejectsBrokenObservations) {
  RankingObservation obs;
  obs.subset = {1, 3};
  obs.permutation = {3, 3};
  EXPECT_THROW(check_observation(obs, 5), StructuralError);
  obs.permutation = {3, 2};
  EXPECT_THROW(check_observation(obs, 5), StructuralError);
  obs.subset = {1, 5};
  obs.permutation = {5, 1};
  EXPECT_THROW(check_observation(obs, 5), StructuralError);
  obs.subset = {1};
  obs.permutation = {1};
  EXPECT_THROW(check_observation(obs, 5), StructuralError);
}

TEST(Recenter, SumsToZero) {
  std::vector<double> v = {1.0, 2.0, 6.0};
  recenter(v);
  EXPECT_DOUBLE_EQ(v[0], -2.0);
  EXPECT_DOUBLE_EQ(v[1], -1.0);
  EXPECT_DOUBLE_EQ(v[2], 3.0);
}

}  // namespace
}  // namespace listrank

namespace listrank {
namespace {

TEST(UtilityGenerator, ParsesSpecs) {
  const UtilityGenerator normal = parse_utility_generator("normal:sd=2");
  EXPECT_EQ(normal.kind, UtilityGenerator::Kind::kNormal);
  EXPECT_EQ(normal.sd, 2.0);
  const UtilityGenerator uniform = parse_utility_generator("uniform:-1,3");
  EXPECT_EQ(uniform.kind, UtilityGenerator::Kind::kUniform);
  EXPECT_EQ(uniform.lo, -1.0);
  EXPECT_EQ(uniform.hi, 3.0);
  const UtilityGenerator tiered = parse_utility_generator("tiered:tiers=4,gap=3");
  EXPECT_EQ(tiered.kind, UtilityGenerator::Kind::kTiered);
  EXPECT_EQ(tiered.tiers, 4);
  EXPECT_EQ(tiered.gap, 3.0);
  EXPECT_EQ(tiered.sd, 0.5);
  EXPECT_THROW(parse_utility_generator("gumbel:sd=1"), ConfigError);
  EXPECT_THROW(parse_utility_generator("uniform:3,1"), ConfigError);
  EXPECT_THROW(parse_utility_generator("normal:width=1"), ConfigError);
}

TEST(UtilityGenerator, SeededAndBounded) {
  const UtilityGenerator uniform = parse_utility_generator("uniform:2,5");
  const auto a = generate_utilities(uniform, 50, 9);
  EXPECT_EQ(a, generate_utilities(uniform, 50, 9));
  EXPECT_NE(a, generate_utilities(uniform, 50, 10));
  for (double v : a) {
    EXPECT_GE(v, 2.0);
    EXPECT_LT(v, 5.0);
  }
}

TEST(UtilityGenerator, TiersAreSeparated) {
  UtilityGenerator tiered = parse_utility_generator("tiered:tiers=3,gap=2,sd=0");
  auto u = generate_utilities(tiered, 30, 1);
  std::sort(u.begin(), u.end());
  EXPECT_EQ(std::count(u.begin(), u.end(), 0.0), 10);
  EXPECT_EQ(std::count(u.begin(), u.end(), 2.0), 10);
  EXPECT_EQ(std::count(u.begin(), u.end(), 4.0), 10);
}

TEST(SynthesizePool, IdsAndLabels) {
  const CandidatePool pool = synthesize_pool(UtilityGenerator{}, 12, 3);
  EXPECT_EQ(pool.size(), 12u);
  EXPECT_EQ(pool.id_of(0), "c000");
  EXPECT_EQ(pool.id_of(11), "c011");
  EXPECT_EQ(pool.candidate(4).label, "Candidate 4");
  EXPECT_TRUE(pool.is_synthetic());
}

}  // namespace
}  // namespace listrank
