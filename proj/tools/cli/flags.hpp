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

#ifndef LISTRANK_TOOLS_FLAGS_HPP_
#define LISTRANK_TOOLS_FLAGS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "listrank/config.hpp"
#include "listrank/orchestrator.hpp"
#include "listrank/types.hpp"

namespace listrank::cli {

// Bad flags or inputs; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Run parameters settable from the command line. Every field is optional so
// that only flags actually given override the --config file.
struct ConfigFlags {
  std::optional<std::string> config_file;
  std::optional<int> k;
  std::optional<int> iters;
  std::optional<std::string> strategy;
  std::optional<std::uint64_t> seed;
  std::optional<double> lambda;
  std::optional<double> tolerance;
  std::optional<int> max_steps;
  std::optional<std::string> cutoffs;
  std::optional<double> shortlist;
  std::optional<int> committee;
  std::optional<int> proposals;
  std::optional<int> rollouts;
  bool prior_ordering = false;
  bool early_stop = false;
  std::optional<int> stop_window;
  std::optional<double> stop_tau;
  std::optional<double> stop_du;
  bool diagnostics = false;
  // Judge parameters.
  std::optional<std::string> judge;
  std::optional<double> beta;
  std::optional<double> p_swap;
  std::optional<std::uint64_t> judge_seed;
  std::optional<int> retries;
  std::optional<int> timeout_ms;

  void add_to(CLI::App& app);
  // Loads --config (if any) and applies the given flags on top.
  TournamentConfig resolve() const;
};

// "10,15,20,25" (percent) -> {0.10, 0.15, 0.20, 0.25}.
std::vector<double> parse_cutoffs(std::string_view text);

// Splits a command line on whitespace, honouring single and double quotes.
std::vector<std::string> split_command(std::string_view text);

// Throws UsageError listing every violation.
void require_valid(const TournamentConfig& config);

// --out if given, else $LISTRANK_OUT_DIR/<run id>.
std::filesystem::path resolve_out_dir(const std::optional<std::string>& out,
                                      const std::string& run_id);

// First `limit` ids of a ranking, space separated.
std::string format_ranking(std::span<const int> order,
                           const CandidatePool& pool, std::size_t limit);

// Final ranking and metrics printed after simulate and run.
void print_run_summary(std::ostream& out, const RunArtifacts& artifacts,
                       const CandidatePool& pool,
                       const std::filesystem::path& dir);

}  // namespace listrank::cli

#endif  // LISTRANK_TOOLS_FLAGS_HPP_
