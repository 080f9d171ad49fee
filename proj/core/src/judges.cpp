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

#include "listrank/judges.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "listrank/errors.hpp"
#include "listrank/external_judge.hpp"
#include "listrank/pl_engine.hpp"

namespace listrank {
namespace {

std::unordered_map<std::string, double> utility_table(const CandidatePool& pool) {
  const std::vector<double> utilities = pool.true_utilities();
  std::unordered_map<std::string, double> table;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    table.emplace(pool.id_of(i), utilities[i]);
  }
  return table;
}

std::vector<double> lookup(const std::unordered_map<std::string, double>& table,
                           const JudgeRequest& request) {
  std::vector<double> out;
  out.reserve(request.candidates.size());
  for (const auto& c : request.candidates) {
    auto it = table.find(c.id);
    if (it == table.end()) throw LookupError(c.id);
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::string format_number(double value) { return fmt::format("{}", value); }

void validate_request(const JudgeRequest& request) {
  if (request.candidates.size() < 2) {
    throw StructuralError("judge request needs at least 2 candidates");
  }
  std::set<std::string_view> ids;
  for (const auto& c : request.candidates) {
    if (!ids.insert(c.id).second) {
      throw StructuralError("judge request repeats id " + c.id);
    }
  }
}

std::optional<std::string> response_violation(const JudgeRequest& request,
                                              const JudgeResponse& response) {
  if (response.ranking.size() != request.candidates.size()) {
    return "ranking has " + std::to_string(response.ranking.size()) +
           " ids, expected " + std::to_string(request.candidates.size());
  }
  std::set<std::string_view> expected;
  for (const auto& c : request.candidates) expected.insert(c.id);
  std::set<std::string_view> seen;
  for (const auto& id : response.ranking) {
    if (!expected.contains(id)) return "ranking contains unknown id " + id;
    if (!seen.insert(id).second) return "ranking repeats id " + id;
  }
  return std::nullopt;
}

JudgeResponse judge_rank(Judge& judge, const JudgeRequest& request) {
  validate_request(request);
  JudgeResponse response = judge.rank(request);
  if (auto violation = response_violation(request, response)) {
    throw JudgeFailure("judge " + judge.tag() + " returned an invalid ranking",
                       *violation);
  }
  return response;
}

SimulatedPlJudge::SimulatedPlJudge(const CandidatePool& pool, double beta,
                                   std::uint64_t seed)
    : utilities_(utility_table(pool)), beta_(beta), rng_(seed) {
  if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
}

JudgeResponse SimulatedPlJudge::rank(const JudgeRequest& request) {
  const std::vector<double> u = lookup(utilities_, request);
  std::vector<int> local(u.size());
  std::iota(local.begin(), local.end(), 0);
  const std::vector<int> order = sample_ranking(u, local, beta_, rng_);
  JudgeResponse response;
  for (int i : order) response.ranking.push_back(request.candidates[i].id);
  return response;
}

std::string SimulatedPlJudge::tag() const {
  return "pl:beta=" + format_number(beta_);
}

SwapNoiseJudge::SwapNoiseJudge(const CandidatePool& pool, double p_swap,
                               std::uint64_t seed)
    : utilities_(utility_table(pool)), p_swap_(p_swap), rng_(seed) {
  if (!(p_swap >= 0.0 && p_swap <= 1.0)) {
    throw ConfigError("p_swap must lie in [0, 1]");
  }
}

JudgeResponse SwapNoiseJudge::rank(const JudgeRequest& request) {
  const std::vector<double> u = lookup(utilities_, request);
  std::vector<int> order = argsort_descending(u);
  std::bernoulli_distribution swap(p_swap_);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (swap(rng_)) std::swap(order[i], order[i + 1]);
  }
  JudgeResponse response;
  for (int i : order) response.ranking.push_back(request.candidates[i].id);
  return response;
}

std::string SwapNoiseJudge::tag() const {
  return "swap:p=" + format_number(p_swap_);
}

InteractiveJudge::InteractiveJudge(std::istream& in, std::ostream& out)
    : in_(in), out_(out) {}

JudgeResponse InteractiveJudge::rank(const JudgeRequest& request) {
  out_ << "\nIteration " << request.iteration
       << ": rank these candidates from strongest to weakest.\n";
  if (request.rubric) out_ << "Rubric:\n" << *request.rubric << "\n";
  if (request.prior_ordering) {
    out_ << "Current model order:";
    for (const auto& id : *request.prior_ordering) out_ << ' ' << id;
    out_ << "\n";
  }
  for (const auto& c : request.candidates) {
    out_ << "  [" << c.id << "] " << c.label << "\n";
    if (c.dossier) out_ << "      " << *c.dossier << "\n";
  }
  std::string line;
  while (true) {
    out_ << "Enter ids, strongest first: " << std::flush;
    if (!std::getline(in_, line)) {
      throw JudgeFailure("interactive input closed before a ranking was given");
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    JudgeResponse response;
    for (std::string id; tokens >> id;) response.ranking.push_back(id);
    auto violation = response_violation(request, response);
    if (!violation) return response;
    out_ << "Invalid ranking: " << *violation << ". Try again.\n";
  }
}

std::unique_ptr<Judge> make_judge(const JudgeSpec& spec,
                                  const CandidatePool& pool,
                                  std::uint64_t seed) {
  const std::uint64_t judge_seed = spec.seed.value_or(seed);
  switch (spec.kind) {
    case JudgeKind::kPlackettLuce:
      return std::make_unique<SimulatedPlJudge>(pool, spec.beta, judge_seed);
    case JudgeKind::kSwapNoise:
      return std::make_unique<SwapNoiseJudge>(pool, spec.p_swap, judge_seed);
    case JudgeKind::kExternal:
      return std::make_unique<ExternalProcessJudge>(spec.command, spec.retries,
                                                    spec.timeout_ms);
    case JudgeKind::kInteractive:
      return std::make_unique<InteractiveJudge>(std::cin, std::cout);
  }
  throw ConfigError("unknown judge kind");
}

}  // namespace listrank
