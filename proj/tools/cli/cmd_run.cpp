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

#include <iostream>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "listrank/errors.hpp"
#include "listrank/random.hpp"
#include "listrank/run_io.hpp"

namespace listrank::cli {

void add_run(CLI::App& app, RunFlags& flags) {
  CLI::App* sub = app.add_subcommand(
      "run", "Run a tournament against an external or interactive judge");
  flags.config.add_to(*sub);
  sub->add_option("--pool", flags.pool, "Pool file")->required();
  sub->add_option("--judge-cmd", flags.judge_cmd,
                  "Judge command line, e.g. \"python3 judge.py\"");
  sub->add_option("--reference", flags.reference,
                  "Reference ranking (JSON array or one id per line)");
  sub->add_option("--out", flags.out, "Run directory (default $LISTRANK_OUT_DIR/<run id>)");
}

int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err) {
  TournamentConfig config = flags.config.resolve();
  std::optional<CandidatePool> pool;
  try {
    pool.emplace(load_pool(*flags.pool));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  config.n_candidates = static_cast<int>(pool->size());
  if (flags.judge_cmd) {
    config.judge.kind = JudgeKind::kExternal;
    config.judge.command = split_command(*flags.judge_cmd);
  } else if (!flags.config.judge && !flags.config.config_file) {
    config.judge.kind = JudgeKind::kExternal;
  }
  if (config.judge.kind == JudgeKind::kExternal && config.judge.command.empty()) {
    throw UsageError("an external judge needs --judge-cmd");
  }
  require_valid(config);

  std::vector<int> reference;
  if (flags.reference) {
    try {
      reference = read_reference_ranking(*flags.reference, *pool);
    } catch (const Error& e) {
      throw UsageError("reference ranking: " + std::string(e.what()));
    }
  }

  std::unique_ptr<Judge> judge;
  try {
    judge = make_judge(config.judge, *pool,
                       derive_seed(config.seed, streams::kJudge));
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  const auto dir =
      resolve_out_dir(flags.out, make_run_id(config, pool_digest(*pool)));
  RunDirectoryWriter writer(dir, !reference.empty());
  try {
    const RunArtifacts artifacts = run(config, *pool, *judge, reference, &writer);
    print_run_summary(out, artifacts, *pool, dir);
  } catch (const RunFailure& e) {
    err << "error: run stopped after " << e.completed_iterations()
        << " completed iterations: " << e.what() << "\n";
    err << "partial artifacts in " << dir.string() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace listrank::cli
