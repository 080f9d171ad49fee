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
#include "listrank/pl_engine.hpp"
#include "listrank/pool_gen.hpp"
#include "listrank/random.hpp"
#include "listrank/run_io.hpp"

namespace listrank::cli {

void add_simulate(CLI::App& app, SimulateFlags& flags) {
  CLI::App* sub = app.add_subcommand(
      "simulate", "Run a tournament against a simulated judge");
  flags.config.add_to(*sub);
  CLI::Option* pool =
      sub->add_option("--pool", flags.pool, "Pool file with true utilities");
  CLI::Option* n = sub->add_option("--n", flags.n, "Synthesize a pool of N candidates");
  sub->add_option("--utility-gen", flags.utility_gen,
                  "normal:sd=S | uniform:LO,HI | tiered:tiers=T,gap=G[,sd=S]")
      ->needs(n);
  pool->excludes(n);
  sub->add_option("--out", flags.out, "Run directory (default $LISTRANK_OUT_DIR/<run id>)");
}

int cmd_simulate(const SimulateFlags& flags, std::ostream& out,
                 std::ostream& err) {
  if (!flags.pool && !flags.n) throw UsageError("pass either --pool or --n");
  TournamentConfig config = flags.config.resolve();
  if (config.judge.kind != JudgeKind::kPlackettLuce &&
      config.judge.kind != JudgeKind::kSwapNoise) {
    throw UsageError("simulate needs a simulated judge (--judge pl or swap)");
  }

  std::optional<CandidatePool> pool;
  if (flags.pool) {
    try {
      pool.emplace(load_pool(*flags.pool));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    if (!pool->is_synthetic()) {
      throw UsageError("simulate needs a pool with true utilities");
    }
    config.n_candidates = static_cast<int>(pool->size());
    require_valid(config);
  } else {
    config.n_candidates = *flags.n;
    require_valid(config);
    try {
      const UtilityGenerator gen =
          parse_utility_generator(flags.utility_gen.value_or("normal:sd=1"));
      pool.emplace(synthesize_pool(gen, *flags.n,
                                   derive_seed(config.seed, streams::kPool)));
    } catch (const ConfigError& e) {
      throw UsageError(e.what());
    }
  }

  const std::vector<int> reference = argsort_descending(pool->true_utilities());
  const auto dir =
      resolve_out_dir(flags.out, make_run_id(config, pool_digest(*pool)));
  auto judge = make_judge(config.judge, *pool,
                          derive_seed(config.seed, streams::kJudge));
  RunDirectoryWriter writer(dir, /*with_ndcg=*/true);
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
