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

#include "listrank/serialization.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "listrank/errors.hpp"

namespace listrank {
namespace {

Json optional_string(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

Json parse_line(std::string_view text, std::size_t line_number) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_number);
  }
}

template <typename T>
T get_field(const Json& j, const char* key, std::size_t line = 0) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field ") + key, line);
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("field ") + key + " has the wrong type", line);
  }
}

std::optional<std::string> get_optional_string(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(std::string(key) + " must be a string");
  return it->get<std::string>();
}

// Infinity has no JSON number form; it is written as the string "inf".
Json encode_real(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

double decode_real(const Json& j, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return std::numeric_limits<double>::infinity();
  if (j == "-inf") return -std::numeric_limits<double>::infinity();
  throw ParseError("field " + key + " must be a number");
}

template <typename T>
void assign(const Json& j, const char* key, T& out) {
  auto it = j.find(key);
  if (it == j.end()) return;
  try {
    out = it->get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("config field ") + key + " has the wrong type");
  }
}

void assign_real(const Json& j, const char* key, double& out) {
  if (auto it = j.find(key); it != j.end()) out = decode_real(*it, key);
}

void reject_unknown(const Json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw ParseError("unknown " + where + " field " + key);
    }
  }
}

std::vector<int> ids_to_indices(const Json& ids, const CandidatePool& pool,
                                const char* key, std::size_t line) {
  if (!ids.is_array()) throw ParseError(std::string(key) + " must be an array", line);
  std::vector<int> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    if (!id.is_string()) throw ParseError(std::string(key) + " holds a non-string id", line);
    try {
      out.push_back(pool.index_of(id.get<std::string>()));
    } catch (const LookupError& e) {
      throw ParseError(e.what(), line);
    }
  }
  return out;
}

}  // namespace

Json pool_to_json(const CandidatePool& pool) {
  Json j;
  j["rubric"] = optional_string(pool.rubric());
  Json candidates = Json::array();
  for (const auto& c : pool.candidates()) {
    Json item;
    item["id"] = c.id;
    item["label"] = c.label;
    item["dossier"] = optional_string(c.dossier);
    item["true_utility"] = c.true_utility ? Json(*c.true_utility) : Json(nullptr);
    candidates.push_back(std::move(item));
  }
  j["candidates"] = std::move(candidates);
  return j;
}

CandidatePool pool_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("pool file must hold a JSON object");
  auto list = j.find("candidates");
  if (list == j.end() || !list->is_array()) {
    throw ParseError("pool file lacks a \"candidates\" array");
  }
  std::vector<Candidate> candidates;
  for (const auto& item : *list) {
    if (!item.is_object()) throw ParseError("candidate entries must be objects");
    Candidate c;
    c.id = get_field<std::string>(item, "id");
    c.label = get_optional_string(item, "label").value_or(c.id);
    c.dossier = get_optional_string(item, "dossier");
    if (auto u = item.find("true_utility"); u != item.end() && !u->is_null()) {
      if (!u->is_number()) throw ParseError("true_utility must be a number");
      c.true_utility = u->get<double>();
    }
    candidates.push_back(std::move(c));
  }
  try {
    return CandidatePool(std::move(candidates), get_optional_string(j, "rubric"));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

CandidatePool load_pool(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open pool file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return pool_from_json(parse_line(buffer.str(), 0));
}

Json config_to_json(const TournamentConfig& c) {
  Json judge;
  judge["kind"] = std::string(to_string(c.judge.kind));
  judge["beta"] = encode_real(c.judge.beta);
  judge["p_swap"] = c.judge.p_swap;
  judge["command"] = c.judge.command;
  judge["retries"] = c.judge.retries;
  judge["timeout_ms"] = c.judge.timeout_ms;
  judge["seed"] = c.judge.seed ? Json(*c.judge.seed) : Json(nullptr);

  Json stop;
  stop["enabled"] = c.early_stopping.enabled;
  stop["window"] = c.early_stopping.window;
  stop["tau_threshold"] = c.early_stopping.tau_threshold;
  stop["du_threshold"] = c.early_stopping.du_threshold;

  Json j;
  j["n_candidates"] = c.n_candidates;
  j["subset_size"] = c.subset_size;
  j["iterations"] = c.iterations;
  j["strategy"] = std::string(to_string(c.strategy));
  j["judge"] = std::move(judge);
  j["seed"] = c.seed;
  j["lambda"] = c.lambda;
  j["fit_tolerance"] = c.fit_tolerance;
  j["max_fit_steps"] = c.max_fit_steps;
  j["cutoffs"] = c.cutoffs;
  j["shortlist_fraction"] = c.shortlist_fraction;
  j["qbc_committee"] = c.qbc_committee;
  j["proposal_pool"] = c.proposal_pool;
  j["mckg_rollouts"] = c.mckg_rollouts;
  j["prior_ordering_in_prompt"] = c.prior_ordering_in_prompt;
  j["early_stopping"] = std::move(stop);
  j["dump_diagnostics"] = c.dump_diagnostics;
  return j;
}

TournamentConfig config_from_json(const Json& j, TournamentConfig c) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  reject_unknown(j,
                 {"n_candidates", "subset_size", "iterations", "strategy",
                  "judge", "seed", "lambda", "fit_tolerance", "max_fit_steps",
                  "cutoffs", "shortlist_fraction", "qbc_committee",
                  "proposal_pool", "mckg_rollouts", "prior_ordering_in_prompt",
                  "early_stopping", "dump_diagnostics"},
                 "config");
  assign(j, "n_candidates", c.n_candidates);
  assign(j, "subset_size", c.subset_size);
  assign(j, "iterations", c.iterations);
  if (auto it = j.find("strategy"); it != j.end()) {
    if (!it->is_string()) throw ParseError("strategy must be a string");
    c.strategy = parse_strategy(it->get<std::string>());
  }
  assign(j, "seed", c.seed);
  assign_real(j, "lambda", c.lambda);
  assign_real(j, "fit_tolerance", c.fit_tolerance);
  assign(j, "max_fit_steps", c.max_fit_steps);
  assign(j, "cutoffs", c.cutoffs);
  assign_real(j, "shortlist_fraction", c.shortlist_fraction);
  assign(j, "qbc_committee", c.qbc_committee);
  assign(j, "proposal_pool", c.proposal_pool);
  assign(j, "mckg_rollouts", c.mckg_rollouts);
  assign(j, "prior_ordering_in_prompt", c.prior_ordering_in_prompt);
  assign(j, "dump_diagnostics", c.dump_diagnostics);

  if (auto it = j.find("judge"); it != j.end()) {
    const Json& jj = *it;
    if (!jj.is_object()) throw ParseError("judge must be an object");
    reject_unknown(jj, {"kind", "beta", "p_swap", "command", "retries",
                        "timeout_ms", "seed"},
                   "judge");
    if (auto k = jj.find("kind"); k != jj.end()) {
      if (!k->is_string()) throw ParseError("judge.kind must be a string");
      c.judge.kind = parse_judge_kind(k->get<std::string>());
    }
    assign_real(jj, "beta", c.judge.beta);
    assign_real(jj, "p_swap", c.judge.p_swap);
    assign(jj, "command", c.judge.command);
    assign(jj, "retries", c.judge.retries);
    assign(jj, "timeout_ms", c.judge.timeout_ms);
    if (auto s = jj.find("seed"); s != jj.end()) {
      if (s->is_null()) {
        c.judge.seed.reset();
      } else if (s->is_number_unsigned()) {
        c.judge.seed = s->get<std::uint64_t>();
      } else {
        throw ParseError("judge.seed must be an unsigned integer or null");
      }
    }
  }
  if (auto it = j.find("early_stopping"); it != j.end()) {
    const Json& s = *it;
    if (!s.is_object()) throw ParseError("early_stopping must be an object");
    reject_unknown(s, {"enabled", "window", "tau_threshold", "du_threshold"},
                   "early_stopping");
    assign(s, "enabled", c.early_stopping.enabled);
    assign(s, "window", c.early_stopping.window);
    assign_real(s, "tau_threshold", c.early_stopping.tau_threshold);
    assign_real(s, "du_threshold", c.early_stopping.du_threshold);
  }
  return c;
}

std::string encode_observation(const RankingObservation& obs,
                               const CandidatePool& pool) {
  Json subset = Json::array();
  for (int i : obs.subset) subset.push_back(pool.id_of(i));
  Json permutation = Json::array();
  for (int i : obs.permutation) permutation.push_back(pool.id_of(i));
  Json j;
  j["iteration"] = obs.iteration;
  j["subset"] = std::move(subset);
  j["permutation"] = std::move(permutation);
  j["judge_tag"] = obs.judge_tag;
  j["wall_time_ms"] = obs.wall_time_ms;
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

RankingObservation decode_observation(std::string_view line,
                                      const CandidatePool& pool,
                                      std::size_t line_number) {
  const Json j = parse_line(line, line_number);
  if (!j.is_object()) throw ParseError("observation must be an object", line_number);
  RankingObservation obs;
  obs.iteration = get_field<int>(j, "iteration", line_number);
  if (obs.iteration < 0) throw ParseError("negative iteration", line_number);
  auto subset = j.find("subset");
  auto permutation = j.find("permutation");
  if (subset == j.end() || permutation == j.end()) {
    throw ParseError("observation lacks subset or permutation", line_number);
  }
  obs.subset = ids_to_indices(*subset, pool, "subset", line_number);
  obs.permutation = ids_to_indices(*permutation, pool, "permutation", line_number);
  obs.judge_tag = get_field<std::string>(j, "judge_tag", line_number);
  obs.wall_time_ms = get_field<std::int64_t>(j, "wall_time_ms", line_number);
  if (obs.wall_time_ms < 0) throw ParseError("negative wall_time_ms", line_number);
  try {
    check_observation(obs, pool.size());
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), line_number);
  }
  return obs;
}

std::vector<RankingObservation> read_observation_log(std::istream& in,
                                                     const CandidatePool& pool) {
  std::vector<RankingObservation> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    out.push_back(decode_observation(line, pool, number));
  }
  return out;
}

std::string encode_state(const UtilityState& state) {
  Json j;
  j["iteration"] = state.iteration;
  j["u"] = state.u;
  j["sigma2"] = state.sigma2;
  j["n_observations"] = state.n_observations;
  return j.dump();
}

UtilityState decode_state(std::string_view line, std::size_t line_number) {
  const Json j = parse_line(line, line_number);
  if (!j.is_object()) throw ParseError("state must be an object", line_number);
  UtilityState state;
  state.iteration = get_field<int>(j, "iteration", line_number);
  state.u = get_field<std::vector<double>>(j, "u", line_number);
  state.sigma2 = get_field<std::vector<double>>(j, "sigma2", line_number);
  state.n_observations = get_field<int>(j, "n_observations", line_number);
  if (state.u.size() != state.sigma2.size()) {
    throw ParseError("u and sigma2 differ in length", line_number);
  }
  return state;
}

std::vector<UtilityState> read_states(std::istream& in) {
  std::vector<UtilityState> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    out.push_back(decode_state(line, number));
  }
  return out;
}

}  // namespace listrank
