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

#ifndef LISTRANK_PL_ENGINE_HPP_
#define LISTRANK_PL_ENGINE_HPP_

// Plackett-Luce likelihood over listwise observations, MAP fitting with an
// L2 prior, diagonal Laplace variances, and sequential PL sampling.
//
// For a permutation pi of a K-subset the log-likelihood is
//
//   sum_{j=1}^{K-1} [ u_{pi_j} - log sum_{l>=j} exp(u_{pi_l}) ]
//
// and the fitted objective is log_likelihood(u) - (lambda / 2) * |u|^2.
// Each stage's log-sum-exp is shifted by the stage maximum.

#include <cstddef>
#include <span>
#include <vector>

#include "listrank/random.hpp"
#include "listrank/types.hpp"

namespace listrank {

// Throws StructuralError when an index is outside [0, u.size()).
double log_likelihood(std::span<const double> u,
                      std::span<const RankingObservation> observations);

// log_likelihood(u) - (lambda / 2) * |u|^2.
double log_posterior(std::span<const double> u,
                     std::span<const RankingObservation> observations,
                     double lambda);

// Gradient of log_posterior. Component i is (#stages i wins) minus the sum of
// its softmax weights over the stages it takes part in, minus lambda * u_i.
std::vector<double> gradient(std::span<const double> u,
                             std::span<const RankingObservation> observations,
                             double lambda);

// Diagonal of the negative log-posterior Hessian:
// H_ii = sum over stages containing i of w_i (1 - w_i), plus lambda.
std::vector<double> hessian_diagonal(
    std::span<const double> u,
    std::span<const RankingObservation> observations, double lambda);

// sigma2_i = 1 / H_ii. Throws StructuralError if some H_ii is not positive,
// which only happens with lambda == 0 and a candidate absent from every stage.
std::vector<double> laplace_variances(
    std::span<const double> u,
    std::span<const RankingObservation> observations, double lambda);

struct FitOptions {
  double lambda = 0.1;
  // Convergence when the infinity norm of the gradient drops to this value.
  double tolerance = 1e-6;
  int max_steps = 500;
};

struct FitReport {
  UtilityState state;
  double final_gradient_norm = 0.0;
  int steps_taken = 0;
  bool converged = false;
  double neg_log_posterior = 0.0;
};

// Maximizes log_posterior by full-batch gradient ascent with a backtracking
// (Armijo) line search starting from a unit step. init may be empty, meaning
// zeros. The result is re-centered to sum zero and carries Laplace variances;
// state.iteration is left at 0 for the caller to set.
//
// With lambda == 0 every candidate must win at least one stage, otherwise no
// finite maximizer exists and StructuralError is thrown. A non-finite
// objective during ascent raises NumericalDivergence.
FitReport fit(std::span<const RankingObservation> observations, std::size_t n,
              const FitOptions& options, std::span<const double> init = {});

// Draws a permutation of subset from PL(beta * u): the next item is picked
// with probability proportional to exp(beta * u_i) among those remaining.
// beta == +inf returns the descending order of u (ties by lower index).
// Throws StructuralError on duplicate or out-of-range indices.
std::vector<int> sample_ranking(std::span<const double> u,
                                std::span<const int> subset, double beta,
                                Rng& rng);

// Indices sorted by descending value, ties broken by lower index.
std::vector<int> argsort_descending(std::span<const double> values);

}  // namespace listrank

#endif  // LISTRANK_PL_ENGINE_HPP_
