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
#include <random>
#include <set>

#include "listrank/errors.hpp"
#include "listrank/metrics.hpp"
#include "listrank/pl_engine.hpp"
#include "oracle/oracle_values.hpp"

namespace listrank {
namespace {

std::vector<int> iota_vector(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

TEST(KendallTau, Anchors) {
  const std::vector<int> r = {1, 2, 3};
  const std::vector<int> swapped = {1, 3, 2};
  EXPECT_EQ(kendall_tau(r, r), 1.0);
  EXPECT_EQ(kendall_tau(r, reversed(r)), -1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(r, swapped), oracle::kTauOneSwap);
  EXPECT_EQ(kendall_tau(r, swapped), 1.0 / 3.0);
}

TEST(KendallTau, SymmetricAndAntisymmetric) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a = iota_vector(9);
    std::vector<int> b = a;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    EXPECT_EQ(kendall_tau(a, b), kendall_tau(b, a));
    EXPECT_EQ(kendall_tau(a, a), 1.0);
    EXPECT_EQ(kendall_tau(a, reversed(a)), -1.0);
    EXPECT_NEAR(kendall_tau(a, reversed(b)), -kendall_tau(a, b), 1e-15);
  }
}

TEST(KendallTau, MismatchedItemsAreStructural) {
  const std::vector<int> a = {0, 1, 2};
  const std::vector<int> b = {0, 1, 3};
  const std::vector<int> c = {0, 1};
  EXPECT_THROW(kendall_tau(a, b), StructuralError);
  EXPECT_THROW(kendall_tau(a, c), StructuralError);
}

TEST(NdcgAt, IdealOrderingScoresOne) {
  const std::vector<int> r = iota_vector(10);
  EXPECT_EQ(ndcg_at(r, r, 0.2), 1.0);
}

TEST(NdcgAt, HandEvaluatedDepthTwo) {
  // Reference top-2 is {0, 1}; predicted puts 0 first and 1 third.
  const std::vector<int> reference = iota_vector(10);
  const std::vector<int> predicted = {0, 5, 1, 2, 3, 4, 6, 7, 8, 9};
  EXPECT_NEAR(ndcg_at(predicted, reference, 0.2), oracle::kNdcgDepth2, 1e-12);
  EXPECT_NEAR(ndcg_at(predicted, reference, 0.2), 0.6131, 5e-5);
}

TEST(NdcgAt, ReversalScoresZero) {
  const std::vector<int> reference = iota_vector(10);
  EXPECT_EQ(ndcg_at(reversed(reference), reference, 0.2), 0.0);
  const std::vector<int> twenty = iota_vector(20);
  EXPECT_EQ(ndcg_at(reversed(twenty), twenty, 0.10), 0.0);
}

TEST(NdcgAt, DepthBelowOneIsStructural) {
  const std::vector<int> r = iota_vector(10);
  EXPECT_THROW(ndcg_at(r, r, 0.0), StructuralError);
}

TEST(NdcgAt, InvariantBelowDepth) {
  std::mt19937_64 rng(4);
  const std::vector<int> reference = iota_vector(20);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> predicted = reference;
    std::shuffle(predicted.begin(), predicted.end(), rng);
    const double base = ndcg_at(predicted, reference, 0.25);
    std::shuffle(predicted.begin() + 5, predicted.end(), rng);
    EXPECT_EQ(ndcg_at(predicted, reference, 0.25), base);
  }
}

TEST(NdcgAt, AnyIdealArrangementScoresOne) {
  std::mt19937_64 rng(5);
  const std::vector<int> reference = iota_vector(20);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> predicted = reference;
    std::shuffle(predicted.begin(), predicted.begin() + 4, rng);
    std::shuffle(predicted.begin() + 4, predicted.end(), rng);
    EXPECT_DOUBLE_EQ(ndcg_at(predicted, reference, 0.2), 1.0);
  }
}

TEST(DeltaU, Examples) {
  const std::vector<double> a = {1.0, 2.0, 3.0};
  EXPECT_EQ(delta_u(a, a), 0.0);
  const std::vector<double> prev = {0.5, 0.5, -1.0, 0.0, 0.0, 0.0};
  const std::vector<double> cur = {3.5, -3.5, -1.0, 0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(delta_u(cur, prev), 5.0);
  EXPECT_THROW(delta_u(a, prev), StructuralError);
}

TEST(DeltaU, ShiftInvariant) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(7);
    std::vector<double> b(7);
    for (double& x : a) x = normal(rng);
    for (double& x : b) x = normal(rng);
    const double base = delta_u(a, b);
    for (double& x : a) x += 4.0;
    for (double& x : b) x += 4.0;
    EXPECT_NEAR(delta_u(a, b), base, 1e-12);
  }
}

TEST(NormalizeSeries, Examples) {
  const std::vector<double> affine = {2, 4, 6};
  EXPECT_EQ(normalize_series(affine), (std::vector<double>{0, 0.5, 1}));
  const std::vector<double> constant = {5, 5, 5};
  EXPECT_EQ(normalize_series(constant), (std::vector<double>{0, 0, 0}));
  const std::vector<double> single = {7};
  EXPECT_EQ(normalize_series(single), (std::vector<double>{0}));
  EXPECT_TRUE(normalize_series(std::vector<double>{}).empty());
}

TEST(NormalizeSeries, BoundedAndPreservesExtremes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(12);
    for (double& x : v) x = dist(rng);
    const auto n = normalize_series(v);
    for (double x : n) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
    EXPECT_EQ(std::max_element(n.begin(), n.end()) - n.begin(),
              std::max_element(v.begin(), v.end()) - v.begin());
    EXPECT_EQ(std::min_element(n.begin(), n.end()) - n.begin(),
              std::min_element(v.begin(), v.end()) - v.begin());
  }
}

TEST(PairwiseExpansion, Examples) {
  const std::vector<char> abc = {'a', 'b', 'c'};
  const auto pairs = pairwise_expansion<char>(abc);
  EXPECT_EQ(pairs, (std::vector<std::pair<char, char>>{{'a', 'b'}, {'a', 'c'}, {'b', 'c'}}));
  const std::vector<int> five = {4, 2, 0, 1, 3};
  EXPECT_EQ(pairwise_expansion<int>(five).size(), 10u);
  const std::vector<int> two = {1, 0};
  EXPECT_EQ(pairwise_expansion<int>(two).size(), 1u);
}

TEST(PairwiseExpansion, TransitivelyClosedAndAcyclic) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> ranking = iota_vector(7);
    std::shuffle(ranking.begin(), ranking.end(), rng);
    const auto pairs = pairwise_expansion<int>(ranking);
    const std::set<std::pair<int, int>> relation(pairs.begin(), pairs.end());
    for (const auto& [a, b] : relation) {
      EXPECT_FALSE(relation.contains({b, a}));
      EXPECT_NE(a, b);
      for (const auto& [c, d] : relation) {
        if (b == c) EXPECT_TRUE(relation.contains({a, d}));
      }
    }
  }
}

TEST(ComputeMetrics, FirstIterationHasNoSuccessiveTau) {
  UtilityState previous;
  previous.u = {0, 0, 0, 0};
  previous.sigma2 = {10, 10, 10, 10};
  UtilityState current = previous;
  current.u = {1.5, 0.5, -0.5, -1.5};
  current.iteration = 1;
  const std::vector<int> reference = {0, 1, 2, 3};
  const std::vector<double> cutoffs = {0.25, 0.5};
  const MetricsRecord record = compute_metrics(current, previous, reference, cutoffs);
  EXPECT_EQ(record.iteration, 1);
  EXPECT_FALSE(record.kendall_tau_successive.has_value());
  EXPECT_NEAR(record.delta_u, std::sqrt(5.0), 1e-12);
  EXPECT_EQ(record.ndcg.at(0.25), 1.0);
  EXPECT_EQ(record.ndcg.at(0.5), 1.0);
  EXPECT_EQ(record.kendall_tau_vs_reference, 1.0);

  UtilityState next = current;
  next.iteration = 2;
  next.u = {-1.5, 0.5, -0.5, 1.5};
  const MetricsRecord second = compute_metrics(next, current, {}, cutoffs);
  ASSERT_TRUE(second.kendall_tau_successive.has_value());
  EXPECT_TRUE(second.ndcg.empty());
  EXPECT_FALSE(second.kendall_tau_vs_reference.has_value());
}

}  // namespace
}  // namespace listrank
