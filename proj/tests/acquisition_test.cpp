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

#include <algorithm>
#include <numeric>
#include <set>

#include "listrank/acquisition.hpp"
#include "listrank/config.hpp"
#include "listrank/errors.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/random.hpp"
#include "oracle/oracle_values.hpp"
#include "test_support.hpp"

namespace listrank {
namespace {

using testing::observation;

UtilityState state_of(std::vector<double> u, std::vector<double> sigma2) {
  UtilityState state;
  state.u = std::move(u);
  state.sigma2 = std::move(sigma2);
  return state;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void expect_valid_subset(const std::vector<int>& subset, int n, int k) {
  ASSERT_EQ(static_cast<int>(subset.size()), k);
  EXPECT_TRUE(std::is_sorted(subset.begin(), subset.end()));
  EXPECT_EQ(std::set<int>(subset.begin(), subset.end()).size(), subset.size());
  for (int i : subset) {
    EXPECT_GE(i, 0);
    EXPECT_LT(i, n);
  }
}

// Fitted state after a few random observations on a pool of n.
std::pair<UtilityState, std::vector<RankingObservation>> fitted_state(int n,
                                                                      std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RankingObservation> obs;
  for (int t = 0; t < 6; ++t) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(4);
    obs.push_back(observation(all, t + 1));
  }
  return {fit(obs, n, FitOptions{}).state, obs};
}

TEST(SelectUniform, ForcedWhenKEqualsN) {
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(select_uniform(5, 5, rng), (std::vector<int>{0, 1, 2, 3, 4}));
  }
}

TEST(SelectUniform, InclusionFrequencies) {
  Rng rng(31337);
  std::vector<int> counts(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    for (int j : select_uniform(10, 3, rng)) ++counts[j];
  }
  for (int c : counts) EXPECT_NEAR(c / static_cast<double>(draws), 0.3, 0.01);
}

TEST(SelectUniform, SameSeedSameSubset) {
  Rng a(8);
  Rng b(8);
  EXPECT_EQ(select_uniform(40, 6, a), select_uniform(40, 6, b));
}

TEST(SelectUniform, KLargerThanNIsStructural) {
  Rng rng(1);
  EXPECT_THROW(select_uniform(3, 4, rng), StructuralError);
}

TEST(SelectVarianceTopK, LargestVariances) {
  const UtilityState state = state_of({0, 0, 0, 0, 0}, {4, 1, 1, 1, 9});
  EXPECT_EQ(select_variance_topk(state, 2), (std::vector<int>{0, 4}));
}

TEST(SelectVarianceTopK, TiesByLowerIndex) {
  const UtilityState state = state_of({0.3, -1, 2, 0, 5}, {1, 1, 1, 1, 1});
  EXPECT_EQ(select_variance_topk(state, 3), (std::vector<int>{0, 1, 2}));
}

TEST(SelectVarianceTopK, IgnoresUtilities) {
  const std::vector<double> sigma2 = {2, 7, 1, 7, 3, 0.5};
  std::vector<double> u = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  const auto base = select_variance_topk(state_of(u, sigma2), 3);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(u.begin(), u.end(), rng);
    EXPECT_EQ(select_variance_topk(state_of(u, sigma2), 3), base);
  }
}

TEST(SelectBoundary, BoundaryAdjacentBlock) {
  // Distinct utilities in scrambled index order; rank r holds order[r - 1].
  const std::vector<double> u = {0.5, 4.0, -1.0, 2.5, 3.0, -0.2, 1.0, -3.0, 2.0, 0.0};
  const std::vector<int> order = argsort_descending(u);
  const UtilityState state = state_of(u, std::vector<double>(10, 1.0));
  std::vector<int> expected;
  for (int rank : oracle::kBoundaryRanks) expected.push_back(order[rank - 1]);
  EXPECT_EQ(select_boundary(state, 4, 0.3), sorted(expected));
}

TEST(SelectBoundary, TiesPreferHigherVariance) {
  const std::vector<double> u = {5, 4, 3, 2, 1, 0};
  // c = 3: ranks 3 and 4 are nearest, then ranks 2 and 5 tie.
  const UtilityState state = state_of(u, {1, 1, 1, 1, 2, 1});
  EXPECT_EQ(select_boundary(state, 3, 0.5), (std::vector<int>{2, 3, 4}));
}

TEST(SelectBoundary, KEqualsNSelectsAll) {
  const UtilityState state = state_of({0.1, 0.5, -0.2, 0.3}, {1, 1, 1, 1});
  EXPECT_EQ(select_boundary(state, 4, 0.5), (std::vector<int>{0, 1, 2, 3}));
}

TEST(SelectBoundary, ShiftInvariant) {
  std::vector<double> u = {0.5, 4.0, -1.0, 2.5, 3.0, -0.2, 1.0, -3.0};
  const std::vector<double> sigma2 = {1, 2, 3, 1, 2, 3, 1, 2};
  const auto base = select_boundary(state_of(u, sigma2), 3, 0.25);
  for (double& x : u) x += 17.0;
  EXPECT_EQ(select_boundary(state_of(u, sigma2), 3, 0.25), base);
}

TEST(CommitteeDisagreement, IdenticalMembersAgree) {
  const std::vector<std::vector<double>> committee = {{1, 2, 3}, {1, 2, 3}};
  const std::vector<int> subset = {0, 1, 2};
  EXPECT_DOUBLE_EQ(committee_disagreement(subset, committee), 0.0);
}

TEST(CommitteeDisagreement, ReversedMembersDisagreeFully) {
  const std::vector<std::vector<double>> committee = {{1, 2, 3}, {3, 2, 1}};
  const std::vector<int> subset = {0, 1, 2};
  EXPECT_DOUBLE_EQ(committee_disagreement(subset, committee), 1.0);
}

TEST(SelectQbc, SingleMemberReturnsFirstProposal) {
  const auto [state, obs] = fitted_state(12, 3);
  Rng rng(5);
  const Selection selection = select_qbc(state, 4, 1, 10, rng);
  ASSERT_EQ(selection.proposals.size(), 10u);
  for (const auto& p : selection.proposals) EXPECT_EQ(p.score, 0.0);
  EXPECT_EQ(selection.chosen, selection.proposals.front());
}

TEST(SelectQbc, ZeroVarianceMeansNoDisagreement) {
  const UtilityState state = state_of({0.1, 0.5, -0.2, 0.3, 1.0}, {0, 0, 0, 0, 0});
  Rng rng(6);
  const Selection selection = select_qbc(state, 3, 16, 8, rng);
  for (const auto& p : selection.proposals) EXPECT_EQ(p.score, 0.0);
  EXPECT_EQ(selection.chosen, selection.proposals.front());
}

TEST(SelectQbc, AvoidsCertainPair) {
  // Items 0 and 1 are certain; the rest are highly uncertain.
  const UtilityState state = state_of({1.0, -1.0, 0.0, 0.0, 0.0}, {1e-6, 1e-6, 9, 9, 9});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    // With 64 proposals of 2 from 5 items every pair is almost surely drawn.
    const Selection selection = select_qbc(state, 2, 64, 64, rng);
    EXPECT_NE(selection.chosen.indices, (std::vector<int>{0, 1})) << "seed " << seed;
  }
}

TEST(KnowledgeGradient, FreshItemsBeatTightItems) {
  // Items 0-2 are heavily observed; items 3-5 have never been seen.
  Rng rng(10);
  std::vector<RankingObservation> obs;
  for (int t = 0; t < 40; ++t) {
    std::vector<int> subset = {0, 1, 2};
    obs.push_back(observation(sample_ranking(std::vector<double>{1, 0, -1, 0, 0, 0},
                                             subset, 1.0, rng),
                              t + 1));
  }
  const UtilityState state = fit(obs, 6, FitOptions{}).state;
  McKgOptions options;
  const std::vector<int> tight = {0, 1, 2};
  const std::vector<int> fresh = {3, 4, 5};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double kg_tight = knowledge_gradient(state, obs, tight, options, seed, 0);
    const double kg_fresh = knowledge_gradient(state, obs, fresh, options, seed, 1);
    EXPECT_GE(kg_tight, 0.0);
    EXPECT_LT(kg_tight, kg_fresh);
  }
}

TEST(KnowledgeGradient, NeverMeaningfullyNegative) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto [state, obs] = fitted_state(10, seed);
    Rng rng(seed);
    McKgOptions options;
    options.proposals = 8;
    const Selection selection = select_mckg(state, obs, 4, options, rng);
    for (const auto& p : selection.proposals) EXPECT_GE(p.score, -1e-9);
  }
}

TEST(SelectMcKg, SingleProposal) {
  const auto [state, obs] = fitted_state(10, 2);
  Rng a(3);
  Rng b(3);
  McKgOptions options;
  options.proposals = 1;
  const Selection selection = select_mckg(state, obs, 4, options, a);
  ASSERT_EQ(selection.proposals.size(), 1u);
  EXPECT_EQ(selection.chosen.indices, select_uniform(10, 4, b));
}

TEST(SelectMcKg, ThreadCountDoesNotChangeResult) {
  const auto [state, obs] = fitted_state(14, 9);
  McKgOptions serial;
  serial.proposals = 6;
  McKgOptions parallel = serial;
  parallel.threads = 4;
  Rng a(77);
  Rng b(77);
  const Selection s1 = select_mckg(state, obs, 5, serial, a);
  const Selection s2 = select_mckg(state, obs, 5, parallel, b);
  EXPECT_EQ(s1.proposals, s2.proposals);
  EXPECT_EQ(s1.chosen, s2.chosen);
}

class StrategyProperties : public ::testing::TestWithParam<Strategy> {};

TEST_P(StrategyProperties, ReturnsKDistinctValidIndicesDeterministically) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [state, obs] = fitted_state(15, seed);
    TournamentConfig config;
    config.n_candidates = 15;
    config.subset_size = 5;
    config.strategy = GetParam();
    config.proposal_pool = 6;
    config.mckg_rollouts = 3;
    Rng a(seed + 100);
    Rng b(seed + 100);
    const Selection s1 = select_subset(config, state, obs, a);
    const Selection s2 = select_subset(config, state, obs, b);
    expect_valid_subset(s1.chosen.indices, 15, 5);
    EXPECT_EQ(s1.chosen, s2.chosen);
    EXPECT_EQ(s1.proposals, s2.proposals);
    EXPECT_EQ(a, b);
  }
}

TEST_P(StrategyProperties, RngUseMatchesContract) {
  const auto [state, obs] = fitted_state(15, 1);
  TournamentConfig config;
  config.n_candidates = 15;
  config.subset_size = 5;
  config.strategy = GetParam();
  config.proposal_pool = 4;
  config.mckg_rollouts = 2;
  Rng rng(5);
  const Rng before = rng;
  select_subset(config, state, obs, rng);
  const bool index_rule =
      GetParam() == Strategy::kVarianceTopK || GetParam() == Strategy::kBoundary;
  EXPECT_EQ(rng == before, index_rule);
}

INSTANTIATE_TEST_SUITE_P(AllStrategies, StrategyProperties,
                         ::testing::Values(Strategy::kUniform, Strategy::kVarianceTopK,
                                           Strategy::kBoundary, Strategy::kQbc,
                                           Strategy::kMcKg),
                         [](const auto& info) { return std::string(to_string(info.param)); });

}  // namespace
}  // namespace listrank
