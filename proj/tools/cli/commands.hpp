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

#ifndef LISTRANK_TOOLS_COMMANDS_HPP_
#define LISTRANK_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/flags.hpp"

namespace listrank::cli {

struct SimulateFlags {
  ConfigFlags config;
  std::optional<std::string> pool;
  std::optional<int> n;
  std::optional<std::string> utility_gen;
  std::optional<std::string> out;
};
void add_simulate(CLI::App& app, SimulateFlags& flags);
int cmd_simulate(const SimulateFlags& flags, std::ostream& out, std::ostream& err);

struct RunFlags {
  ConfigFlags config;
  std::optional<std::string> pool;
  std::optional<std::string> judge_cmd;
  std::optional<std::string> reference;
  std::optional<std::string> out;
};
void add_run(CLI::App& app, RunFlags& flags);
int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err);

struct EvaluateFlags {
  std::optional<std::string> run;
  std::optional<std::string> state;
  std::optional<std::string> pool;
  std::optional<std::string> utilities;
  std::string reference;
  std::string cutoffs = "10,15,20,25";
  std::optional<std::string> csv;
};
void add_evaluate(CLI::App& app, EvaluateFlags& flags);
int cmd_evaluate(const EvaluateFlags& flags, std::ostream& out, std::ostream& err);

struct ReplayFlags {
  std::string run;
  std::optional<int> iters;
};
void add_replay(CLI::App& app, ReplayFlags& flags);
int cmd_replay(const ReplayFlags& flags, std::ostream& out, std::ostream& err);

struct ReportFlags {
  std::string run;
  std::optional<std::string> out;
  bool svg = false;
};
void add_report(CLI::App& app, ReportFlags& flags);
int cmd_report(const ReportFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace listrank::cli

#endif  // LISTRANK_TOOLS_COMMANDS_HPP_
