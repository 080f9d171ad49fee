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

#include "listrank/pl_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "listrank/errors.hpp"

namespace listrank {
namespace {

void check_all(std::span<const RankingObservation> observations,
               std::size_t n) {
  for (const auto& obs : observations) check_observation(obs, n);
}

// Adds one observation's log-likelihood and, when requested, its gradient and
// Hessian-diagonal contributions. Indices are assumed valid.
void accumulate(std::span<const double> u, const std::vector<int>& perm,
                double* ll, std::span<double> grad, std::span<double> hess) {
  const std::size_t k = perm.size();
  for (std::size_t j = 0; j + 1 < k; ++j) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t l = j; l < k; ++l) m = std::max(m, u[perm[l]]);
    double s = 0.0;
    for (std::size_t l = j; l < k; ++l) s += std::exp(u[perm[l]] - m);
    const double lse = m + std::log(s);
    *ll += u[perm[j]] - lse;
    if (grad.empty() && hess.empty()) continue;
    if (!grad.empty()) grad[perm[j]] += 1.0;
    for (std::size_t l = j; l < k; ++l) {
      const double w = std::exp(u[perm[l]] - lse);
      if (!grad.empty()) grad[perm[l]] -= w;
      if (!hess.empty()) hess[perm[l]] += w * (1.0 - w);
    }
  }
}

double unchecked_log_posterior(std::span<const double> u,
                               std::span<const RankingObservation> observations,
                               double lambda) {
  double ll = 0.0;
  for (const auto& obs : observations) accumulate(u, obs.permutation, &ll, {}, {});
  double sq = 0.0;
  for (double v : u) sq += v * v;
  return ll - 0.5 * lambda * sq;
}

std::vector<double> unchecked_gradient(
    std::span<const double> u, std::span<const RankingObservation> observations,
    double lambda) {
  std::vector<double> grad(u.size(), 0.0);
  double ll = 0.0;
  for (const auto& obs : observations) {
    accumulate(u, obs.permutation, &ll, grad, {});
  }
  for (std::size_t i = 0; i < u.size(); ++i) grad[i] -= lambda * u[i];
  return grad;
}

std::vector<double> unchecked_hessian_diagonal(
    std::span<const double> u, std::span<const RankingObservation> observations,
    double lambda) {
  std::vector<double> hess(u.size(), lambda);
  double ll = 0.0;
  for (const auto& obs : observations) {
    accumulate(u, obs.permutation, &ll, {}, hess);
  }
  return hess;
}

double inf_norm(std::span<const double> v) {
  double out = 0.0;
  for (double x : v) out = std::max(out, std::abs(x));
  return out;
}

}  // namespace

double log_likelihood(std::span<const double> u,
                      std::span<const RankingObservation> observations) {
  check_all(observations, u.size());
  double ll = 0.0;
  for (const auto& obs : observations) accumulate(u, obs.permutation, &ll, {}, {});
  return ll;
}

double log_posterior(std::span<const double> u,
                     std::span<const RankingObservation> observations,
                     double lambda) {
  check_all(observations, u.size());
  return unchecked_log_posterior(u, observations, lambda);
}

std::vector<double> gradient(std::span<const double> u,
                             std::span<const RankingObservation> observations,
                             double lambda) {
  check_all(observations, u.size());
  return unchecked_gradient(u, observations, lambda);
}

std::vector<double> hessian_diagonal(
    std::span<const double> u, std::span<const RankingObservation> observations,
    double lambda) {
  check_all(observations, u.size());
  return unchecked_hessian_diagonal(u, observations, lambda);
}

std::vector<double> laplace_variances(
    std::span<const double> u, std::span<const RankingObservation> observations,
    double lambda) {
  std::vector<double> h = hessian_diagonal(u, observations, lambda);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0)) {
      throw StructuralError("candidate " + std::to_string(i) +
                            " has zero curvature; lambda = 0 requires every "
                            "candidate to be observed");
    }
    h[i] = 1.0 / h[i];
  }
  return h;
}

FitReport fit(std::span<const RankingObservation> observations, std::size_t n,
              const FitOptions& options, std::span<const double> init) {
  check_all(observations, n);
  if (!(options.lambda >= 0.0)) throw StructuralError("lambda must be >= 0");
  if (!(options.tolerance > 0.0)) throw StructuralError("tolerance must be > 0");
  if (!init.empty() && init.size() != n) {
    throw StructuralError("init has length " + std::to_string(init.size()) +
                          ", expected " + std::to_string(n));
  }
  if (options.lambda == 0.0) {
    std::vector<bool> wins(n, false);
    for (const auto& obs : observations) {
      for (std::size_t j = 0; j + 1 < obs.permutation.size(); ++j) {
        wins[obs.permutation[j]] = true;
      }
    }
    auto it = std::find(wins.begin(), wins.end(), false);
    if (it != wins.end()) {
      throw StructuralError(
          "lambda = 0 needs every candidate to win a stage; candidate " +
          std::to_string(it - wins.begin()) + " never does");
    }
  }

  std::vector<double> u(n, 0.0);
  if (!init.empty()) std::copy(init.begin(), init.end(), u.begin());
  recenter(u);

  constexpr double kArmijo = 1e-4;
  constexpr double kMinStep = 1e-30;

  double f = unchecked_log_posterior(u, observations, options.lambda);
  if (!std::isfinite(f)) throw NumericalDivergence(0);

  FitReport report;
  std::vector<double> candidate(n);
  std::vector<double> g = unchecked_gradient(u, observations, options.lambda);
  double gnorm = inf_norm(g);
  int step = 0;
  while (gnorm > options.tolerance && step < options.max_steps) {
    double g2 = 0.0;
    for (double x : g) g2 += x * x;
    double t = 1.0;
    bool accepted = false;
    while (t >= kMinStep) {
      for (std::size_t i = 0; i < n; ++i) candidate[i] = u[i] + t * g[i];
      const double fc =
          unchecked_log_posterior(candidate, observations, options.lambda);
      if (!std::isfinite(fc)) throw NumericalDivergence(step);
      if (fc >= f + kArmijo * t * g2) {
        u.swap(candidate);
        f = fc;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;  // Stalled at floating-point resolution.
    ++step;
    g = unchecked_gradient(u, observations, options.lambda);
    gnorm = inf_norm(g);
  }

  recenter(u);
  report.final_gradient_norm = gnorm;
  report.steps_taken = step;
  report.converged = gnorm <= options.tolerance;
  report.neg_log_posterior = -f;
  report.state.sigma2 = laplace_variances(u, observations, options.lambda);
  report.state.u = std::move(u);
  report.state.n_observations = static_cast<int>(observations.size());
  return report;
}

std::vector<int> argsort_descending(std::span<const double> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return values[a] > values[b];
  });
  return order;
}

std::vector<int> sample_ranking(std::span<const double> u,
                                std::span<const int> subset, double beta,
                                Rng& rng) {
  if (subset.size() < 2) throw StructuralError("subset needs at least 2 items");
  if (!(beta >= 0.0)) throw StructuralError("beta must be >= 0");
  std::vector<int> remaining(subset.begin(), subset.end());
  {
    std::vector<int> sorted = remaining;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw StructuralError("subset has duplicate indices");
    }
    if (sorted.front() < 0 || static_cast<std::size_t>(sorted.back()) >= u.size()) {
      throw StructuralError("subset index out of range");
    }
  }

  if (std::isinf(beta)) {
    std::stable_sort(remaining.begin(), remaining.end(), [&](int a, int b) {
      return u[a] > u[b] || (u[a] == u[b] && a < b);
    });
    return remaining;
  }

  std::vector<int> out;
  out.reserve(remaining.size());
  std::vector<double> weights(remaining.size());
  while (remaining.size() > 1) {
    double m = -std::numeric_limits<double>::infinity();
    for (int i : remaining) m = std::max(m, beta * u[i]);
    double total = 0.0;
    for (std::size_t l = 0; l < remaining.size(); ++l) {
      weights[l] = std::exp(beta * u[remaining[l]] - m);
      total += weights[l];
    }
    const double r = std::uniform_real_distribution<double>(0.0, total)(rng);
    std::size_t pick = remaining.size() - 1;
    double acc = 0.0;
    for (std::size_t l = 0; l < remaining.size(); ++l) {
      acc += weights[l];
      if (r < acc) {
        pick = l;
        break;
      }
    }
    out.push_back(remaining[pick]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  out.push_back(remaining.front());
  return out;
}

}  // namespace listrank
