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

#include "cli/cli.hpp"

#include <iostream>

#include "cli/commands.hpp"
#include "listrank/errors.hpp"

namespace listrank::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Active listwise tournament ranking with Plackett-Luce aggregation",
               "listrank"};
  app.require_subcommand(1);

  SimulateFlags simulate;
  RunFlags run;
  EvaluateFlags evaluate;
  ReplayFlags replay;
  ReportFlags report;
  add_simulate(app, simulate);
  add_run(app, run);
  add_evaluate(app, evaluate);
  add_replay(app, replay);
  add_report(app, report);

  std::vector<std::string> storage{"listrank"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const auto* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("simulate")) return cmd_simulate(simulate, out, err);
    if (app.got_subcommand("run")) return cmd_run(run, out, err);
    if (app.got_subcommand("evaluate")) return cmd_evaluate(evaluate, out, err);
    if (app.got_subcommand("replay")) return cmd_replay(replay, out, err);
    if (app.got_subcommand("report")) return cmd_report(report, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace listrank::cli
