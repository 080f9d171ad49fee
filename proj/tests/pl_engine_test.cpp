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
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "listrank/errors.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/random.hpp"
#include "oracle/oracle_values.hpp"
#include "test_support.hpp"

namespace listrank {
namespace {

using testing::observation;

constexpr double kInfinity = std::numeric_limits<double>::infinity();

std::vector<RankingObservation> random_observations(int n, int max_k, int count,
                                                    Rng& rng) {
  std::vector<RankingObservation> obs;
  std::uniform_int_distribution<int> k_dist(2, std::min(max_k, n));
  for (int t = 0; t < count; ++t) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k_dist(rng));
    obs.push_back(observation(all, t + 1));
  }
  return obs;
}

std::vector<double> random_utilities(int n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.5);
  std::vector<double> u(n);
  for (double& x : u) x = normal(rng);
  return u;
}

double naive_probability(const std::vector<double>& u, const std::vector<int>& perm) {
  double p = 1.0;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    double denom = 0.0;
    for (std::size_t l = j; l < perm.size(); ++l) denom += std::exp(u[perm[l]]);
    p *= std::exp(u[perm[j]]) / denom;
  }
  return p;
}

TEST(LogLikelihood, UniformUtilities) {
  const std::vector<double> u = {0.0, 0.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 1, 2})};
  EXPECT_NEAR(log_likelihood(u, obs), oracle::kLogLikUniform3, 1e-12);
}

TEST(LogLikelihood, SingleStage) {
  const std::vector<double> u = {std::log(2.0), 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 1})};
  EXPECT_NEAR(log_likelihood(u, obs), oracle::kLogLikLn2Pair, 1e-12);
}

TEST(LogLikelihood, EmptyLogIsZero) {
  const std::vector<double> u = {0.3, -0.7};
  EXPECT_EQ(log_likelihood(u, {}), 0.0);
}

TEST(LogLikelihood, OutOfRangeIndexIsStructural) {
  const std::vector<double> u = {0.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 2})};
  EXPECT_THROW(log_likelihood(u, obs), StructuralError);
}

TEST(LogLikelihood, StableForExtremeUtilities) {
  const std::vector<double> u = {800.0, -800.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({1, 2, 0})};
  const double ll = log_likelihood(u, obs);
  EXPECT_TRUE(std::isfinite(ll));
  EXPECT_NEAR(ll, -2400.0, 1e-9);
}

TEST(LogLikelihood, PermutationMassSumsToOne) {
  const std::vector<double> u = {0.3, -1.2, 2.0, 0.7};
  std::vector<int> perm = {0, 1, 2, 3};
  double total = 0.0;
  do {
    const std::vector<RankingObservation> obs = {observation(perm)};
    total += std::exp(log_likelihood(u, obs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_NEAR(total, oracle::kPermutationMassK4, 1e-12);
}

TEST(LogLikelihood, MatchesNaiveProductForSmallSubsets) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> u = random_utilities(6, rng);
    for (int k = 2; k <= 4; ++k) {
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        const std::vector<RankingObservation> obs = {observation(perm)};
        const double naive = naive_probability(u, perm);
        EXPECT_NEAR(std::exp(log_likelihood(u, obs)) / naive, 1.0, 1e-12);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(LogLikelihood, TranslationInvariant) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> u = random_utilities(8, rng);
    const auto obs = random_observations(8, 5, 6, rng);
    const double base = log_likelihood(u, obs);
    for (double c : {-3.0, 0.5, 10.0}) {
      std::vector<double> shifted = u;
      for (double& x : shifted) x += c;
      EXPECT_NEAR(log_likelihood(shifted, obs), base, 1e-10);
    }
  }
}

TEST(Gradient, SinglePairAtOrigin) {
  const std::vector<double> u = {0.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 1})};
  const auto g = gradient(u, obs, 0.0);
  EXPECT_NEAR(g[0], oracle::kGradPairA, 1e-12);
  EXPECT_NEAR(g[1], oracle::kGradPairB, 1e-12);
}

TEST(Gradient, MatchesCentralDifferences) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const std::vector<double> u = random_utilities(n, rng);
    const auto obs = random_observations(n, 5, 1 + static_cast<int>(rng() % 6), rng);
    const double lambda = (trial % 2 == 0) ? 0.0 : 0.3;
    const auto g = gradient(u, obs, lambda);
    for (int i = 0; i < n; ++i) {
      std::vector<double> up = u;
      std::vector<double> down = u;
      up[i] += 1e-5;
      down[i] -= 1e-5;
      const double fd =
          (log_posterior(up, obs, lambda) - log_posterior(down, obs, lambda)) / 2e-5;
      EXPECT_NEAR(g[i], fd, 1e-6);
    }
  }
}

TEST(Gradient, ComponentsSumToRegularizerTerm) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> u = random_utilities(7, rng);
    const auto obs = random_observations(7, 5, 5, rng);
    double sum_u = 0.0;
    for (double x : u) sum_u += x;
    for (double lambda : {0.0, 0.25}) {
      const auto g = gradient(u, obs, lambda);
      double sum = 0.0;
      for (double x : g) sum += x;
      EXPECT_NEAR(sum, -lambda * sum_u, 1e-10);
    }
  }
}

TEST(Fit, EmptyLogGivesZeros) {
  FitOptions options;
  options.lambda = 0.3;
  const FitReport report = fit({}, 4, options);
  EXPECT_TRUE(report.converged);
  EXPECT_EQ(report.state.u, std::vector<double>(4, 0.0));
}

TEST(Fit, BradleyTerryClosedForm) {
  const std::vector<RankingObservation> obs = {observation({0, 1}), observation({0, 1}),
                                               observation({1, 0})};
  FitOptions options;
  options.lambda = 0.0;
  const FitReport report = fit(obs, 2, options);
  EXPECT_TRUE(report.converged);
  EXPECT_NEAR(report.state.u[0] - report.state.u[1], oracle::kBradleyTerryGap, 1e-4);
  EXPECT_NEAR(report.state.u[0] - report.state.u[1], std::log(2.0), 1e-4);
}

TEST(Fit, RecoversTotalOrderFromDeterministicJudge) {
  const std::vector<double> truth = {0.4, 2.0, -1.0, 3.1, 0.0, 1.2, -2.2, 0.9};
  const std::vector<int> order = argsort_descending(truth);
  Rng rng(99);
  std::vector<RankingObservation> obs;
  for (int t = 0; t < 50; ++t) {
    std::vector<int> subset(8);
    std::iota(subset.begin(), subset.end(), 0);
    std::shuffle(subset.begin(), subset.end(), rng);
    subset.resize(4);
    obs.push_back(observation(sample_ranking(truth, subset, kInfinity, rng), t + 1));
  }
  const FitReport report = fit(obs, 8, FitOptions{});
  EXPECT_TRUE(report.converged);
  EXPECT_EQ(argsort_descending(report.state.u), order);
}

TEST(Fit, ResultIsCentered) {
  Rng rng(3);
  const auto obs = random_observations(9, 5, 12, rng);
  const FitReport report = fit(obs, 9, FitOptions{});
  double sum = 0.0;
  for (double x : report.state.u) sum += x;
  EXPECT_NEAR(sum, 0.0, 1e-12);
  EXPECT_LE(report.final_gradient_norm, 1e-6);
  EXPECT_EQ(report.state.n_observations, 12);
}

TEST(Fit, Deterministic) {
  Rng rng(17);
  const auto obs = random_observations(10, 5, 15, rng);
  const std::vector<double> init = random_utilities(10, rng);
  const FitReport a = fit(obs, 10, FitOptions{}, init);
  const FitReport b = fit(obs, 10, FitOptions{}, init);
  EXPECT_EQ(a.state.u, b.state.u);
  EXPECT_EQ(a.state.sigma2, b.state.sigma2);
}

TEST(Fit, ZeroLambdaNeedsEveryCandidateToWin) {
  const std::vector<RankingObservation> obs = {observation({0, 1, 2})};
  FitOptions options;
  options.lambda = 0.0;
  EXPECT_THROW(fit(obs, 3, options), StructuralError);
}

TEST(Fit, RejectsWrongInitLength) {
  const std::vector<double> init = {0.0, 0.0};
  EXPECT_THROW(fit({}, 3, FitOptions{}, init), StructuralError);
}

TEST(Fit, TopTwoOrderStableUnderConsistentEvidence) {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const int n = 8;
    auto obs = random_observations(n, 5, 10, rng);
    FitReport report = fit(obs, n, FitOptions{});
    const std::vector<int> before = argsort_descending(report.state.u);
    for (int extra = 0; extra < 5; ++extra) {
      // Each appended ranking covers both leaders plus random others.
      std::vector<int> others(before.begin() + 2, before.end());
      std::shuffle(others.begin(), others.end(), rng);
      std::vector<int> subset = {before[0], before[1], others[0], others[1]};
      obs.push_back(observation(
          sample_ranking(report.state.u, subset, kInfinity, rng), 11 + extra));
    }
    report = fit(obs, n, FitOptions{}, report.state.u);
    const std::vector<int> after = argsort_descending(report.state.u);
    const auto pos = [&](int item) {
      return std::find(after.begin(), after.end(), item) - after.begin();
    };
    if (pos(before[0]) > pos(before[1])) {
      ++violations;
      ADD_FAILURE() << "seed " << seed << " reversed the top two items";
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(LaplaceVariances, SinglePairAtOrigin) {
  const std::vector<double> u = {0.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 1})};
  const auto s2 = laplace_variances(u, obs, 0.0);
  EXPECT_NEAR(s2[0], oracle::kPairVariance, 1e-12);
  EXPECT_NEAR(s2[1], oracle::kPairVariance, 1e-12);
}

TEST(LaplaceVariances, PriorOnly) {
  const std::vector<double> u = {0.0, 1.0, -1.0};
  const auto s2 = laplace_variances(u, {}, 0.5);
  for (double v : s2) EXPECT_DOUBLE_EQ(v, 2.0);
}

TEST(LaplaceVariances, UnobservedWithoutPriorIsStructural) {
  const std::vector<double> u = {0.0, 0.0, 0.0};
  const std::vector<RankingObservation> obs = {observation({0, 1})};
  EXPECT_THROW(laplace_variances(u, obs, 0.0), StructuralError);
}

TEST(LaplaceVariances, BoundedByPriorVariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const std::vector<double> u = random_utilities(8, rng);
    const auto obs = random_observations(8, 5, 12, rng);
    std::vector<bool> seen(u.size(), false);
    for (const auto& o : obs) {
      for (int i : o.permutation) seen[i] = true;
    }
    const auto s2 = laplace_variances(u, obs, 0.1);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (seen[i]) {
        EXPECT_LT(s2[i], 1.0 / 0.1);
      } else {
        EXPECT_DOUBLE_EQ(s2[i], 1.0 / 0.1);
      }
    }
  }
}

TEST(LaplaceVariances, MatchHessianDiagonal) {
  Rng rng(4);
  const std::vector<double> u = random_utilities(6, rng);
  const auto obs = random_observations(6, 4, 8, rng);
  const auto h = hessian_diagonal(u, obs, 0.1);
  const auto s2 = laplace_variances(u, obs, 0.1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_DOUBLE_EQ(s2[i], 1.0 / h[i]);
    std::vector<double> up = u;
    std::vector<double> down = u;
    up[i] += 1e-4;
    down[i] -= 1e-4;
    const double fd = -(log_posterior(up, obs, 0.1) - 2 * log_posterior(u, obs, 0.1) +
                        log_posterior(down, obs, 0.1)) /
                      1e-8;
    EXPECT_NEAR(h[i], fd, 1e-4);
  }
}

TEST(SampleRanking, LargeBetaIsArgsort) {
  const std::vector<double> u = {0.0, 3.0, -2.0, 1.5, 6.0};
  const std::vector<int> subset = {0, 1, 3, 4};
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(sample_ranking(u, subset, 1000.0, rng), (std::vector<int>{4, 1, 3, 0}));
  }
  EXPECT_EQ(sample_ranking(u, subset, kInfinity, rng), (std::vector<int>{4, 1, 3, 0}));
}

TEST(SampleRanking, ZeroBetaIsUniform) {
  const std::vector<double> u = {5.0, 0.0, -3.0};
  const std::vector<int> subset = {0, 1, 2};
  Rng rng(12345);
  std::map<std::vector<int>, int> counts;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[sample_ranking(u, subset, 0.0, rng)];
  ASSERT_EQ(counts.size(), 6u);
  const double expected = draws / 6.0;
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, oracle::kChiSquare5Dof99);
}

TEST(SampleRanking, TopOneFollowsSoftmax) {
  const std::vector<double> u = {0.5, -0.2, 1.1};
  const std::vector<int> subset = {0, 1, 2};
  Rng rng(777);
  std::vector<int> top(3, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++top[sample_ranking(u, subset, 1.0, rng).front()];
  double z = 0.0;
  for (double x : u) z += std::exp(x);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(top[i] / static_cast<double>(draws), std::exp(u[i]) / z, 0.01);
  }
}

TEST(SampleRanking, DuplicateSubsetIsStructural) {
  const std::vector<double> u = {0.0, 1.0};
  const std::vector<int> subset = {1, 1};
  Rng rng(1);
  EXPECT_THROW(sample_ranking(u, subset, 1.0, rng), StructuralError);
}

TEST(Argsort, StableDescending) {
  const std::vector<double> v = {1.0, 3.0, 1.0, 2.0};
  EXPECT_EQ(argsort_descending(v), (std::vector<int>{1, 3, 0, 2}));
}

}  // namespace
}  // namespace listrank
