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

#include <cmath>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "listrank/digest.hpp"
#include "listrank/errors.hpp"
#include "listrank/run_io.hpp"

namespace listrank::cli {
namespace {

constexpr double kAuditTolerance = 1e-9;

double max_deviation(const UtilityState& a, const UtilityState& b) {
  if (a.u.size() != b.u.size() || a.sigma2.size() != b.sigma2.size()) {
    return std::numeric_limits<double>::infinity();
  }
  double out = 0.0;
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    out = std::max(out, std::abs(a.u[i] - b.u[i]));
    out = std::max(out, std::abs(a.sigma2[i] - b.sigma2[i]));
  }
  return out;
}

}  // namespace

void add_replay(CLI::App& app, ReplayFlags& flags) {
  CLI::App* sub = app.add_subcommand(
      "replay", "Refit a run from its observation log and audit its states");
  sub->add_option("--run", flags.run, "Run directory")->required();
  sub->add_option("--iters", flags.iters, "Replay only the first N observations");
}

int cmd_replay(const ReplayFlags& flags, std::ostream& out, std::ostream& err) {
  const std::filesystem::path dir(flags.run);
  if (!std::filesystem::exists(dir / run_files::kObservations) ||
      !std::filesystem::exists(dir / run_files::kConfig)) {
    throw UsageError("not a run directory: " + dir.string());
  }
  const TournamentConfig config =
      config_from_json(Json::parse(read_file(dir / run_files::kConfig)));
  const CandidatePool pool = load_pool((dir / run_files::kPool).string());

  const std::string log = read_file(dir / run_files::kObservations);
  if (std::filesystem::exists(dir / run_files::kManifest)) {
    const RunManifest manifest =
        manifest_from_json(Json::parse(read_file(dir / run_files::kManifest)));
    if (sha256_hex(log) != manifest.observations_digest) {
      err << "audit failed: observations.jsonl does not match the digest "
             "recorded in manifest.json\n";
      return kExitFailure;
    }
  }

  std::istringstream log_stream(log);
  std::vector<RankingObservation> observations;
  try {
    observations = read_observation_log(log_stream, pool);
  } catch (const ParseError& e) {
    err << "audit failed: observations.jsonl " << e.what() << "\n";
    return kExitFailure;
  }
  std::size_t t = observations.size();
  if (flags.iters) {
    if (*flags.iters < 0 || static_cast<std::size_t>(*flags.iters) > t) {
      throw UsageError("--iters must lie in [0, " + std::to_string(t) + "]");
    }
    t = static_cast<std::size_t>(*flags.iters);
  }
  observations.resize(t);

  std::ifstream states_in(dir / run_files::kStates, std::ios::binary);
  const std::vector<UtilityState> stored = read_states(states_in);
  if (stored.size() < t + 1) {
    err << "audit failed: states.jsonl holds " << stored.size()
        << " states, need " << t + 1 << "\n";
    return kExitFailure;
  }

  const std::vector<UtilityState> replayed = replay(observations, config, pool.size());
  double deviation = 0.0;
  for (std::size_t i = 0; i < replayed.size(); ++i) {
    deviation = std::max(deviation, max_deviation(replayed[i], stored[i + 1]));
  }
  out << "replayed " << t << " observations; max deviation "
      << fmt::format("{:.3e}", deviation) << "\n";
  if (!(deviation <= kAuditTolerance)) {
    err << "audit failed: replayed states deviate from states.jsonl by "
        << fmt::format("{:.3e}", deviation) << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace listrank::cli
