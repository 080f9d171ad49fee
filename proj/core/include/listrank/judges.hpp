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

#ifndef LISTRANK_JUDGES_HPP_
#define LISTRANK_JUDGES_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "listrank/config.hpp"
#include "listrank/random.hpp"
#include "listrank/types.hpp"

namespace listrank {

// What a judge gets to see of a candidate. Utilities, true or fitted, are
// never part of a request.
struct JudgeCandidate {
  std::string id;
  std::string label;
  std::optional<std::string> dossier;

  bool operator==(const JudgeCandidate&) const = default;
};

struct JudgeRequest {
  int iteration = 0;
  std::optional<std::string> rubric;
  // Current fitted order of the requested candidates, strongest first.
  std::optional<std::vector<std::string>> prior_ordering;
  std::vector<JudgeCandidate> candidates;

  bool operator==(const JudgeRequest&) const = default;
};

struct JudgeResponse {
  std::vector<std::string> ranking;
  std::optional<std::string> meta;
};

// The subset-ranking contract. Implementations need not be thread safe.
class Judge {
 public:
  virtual ~Judge() = default;

  virtual JudgeResponse rank(const JudgeRequest& request) = 0;
  // Recorded on every observation produced by this judge.
  virtual std::string tag() const = 0;
  // Simulated judges return false so that logs stay byte-reproducible.
  virtual bool reports_wall_time() const { return true; }
};

// Throws StructuralError for fewer than two candidates or duplicate ids.
void validate_request(const JudgeRequest& request);

// Describes why response is not a permutation of the request ids, or nullopt.
std::optional<std::string> response_violation(const JudgeRequest& request,
                                              const JudgeResponse& response);

// Central entry point: validates the request, calls the judge and rejects any
// response that is not a permutation of the requested ids with JudgeFailure.
JudgeResponse judge_rank(Judge& judge, const JudgeRequest& request);

// Samples rankings from PL(beta * true utility).
class SimulatedPlJudge : public Judge {
 public:
  // Throws ConfigError if the pool has no true utilities or beta < 0.
  SimulatedPlJudge(const CandidatePool& pool, double beta, std::uint64_t seed);

  JudgeResponse rank(const JudgeRequest& request) override;
  std::string tag() const override;
  bool reports_wall_time() const override { return false; }

 private:
  std::unordered_map<std::string, double> utilities_;
  double beta_;
  Rng rng_;
};

// Starts from the true descending order and makes one left-to-right pass,
// swapping each adjacent pair independently with probability p_swap.
class SwapNoiseJudge : public Judge {
 public:
  SwapNoiseJudge(const CandidatePool& pool, double p_swap, std::uint64_t seed);

  JudgeResponse rank(const JudgeRequest& request) override;
  std::string tag() const override;
  bool reports_wall_time() const override { return false; }

 private:
  std::unordered_map<std::string, double> utilities_;
  double p_swap_;
  Rng rng_;
};

// Asks a human on a terminal. Accepts ids separated by spaces or commas and
// re-prompts until a valid permutation is typed; end of input is a failure.
class InteractiveJudge : public Judge {
 public:
  InteractiveJudge(std::istream& in, std::ostream& out);

  JudgeResponse rank(const JudgeRequest& request) override;
  std::string tag() const override { return "interactive"; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

// Builds the judge described by spec. seed is used for simulated judges unless
// spec.seed overrides it.
std::unique_ptr<Judge> make_judge(const JudgeSpec& spec,
                                  const CandidatePool& pool,
                                  std::uint64_t seed);

// Shortest round-trip text for a double, "inf" for infinity.
std::string format_number(double value);

}  // namespace listrank

#endif  // LISTRANK_JUDGES_HPP_
