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

#include "cli/flags.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "listrank/errors.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/run_io.hpp"
#include "listrank/serialization.hpp"

namespace listrank::cli {

void ConfigFlags::add_to(CLI::App& app) {
  app.add_option("--config", config_file, "JSON config file; flags override it");
  app.add_option("--k", k, "Subset size K per tournament");
  app.add_option("--iters", iters, "Number of active-learning iterations");
  app.add_option("--strategy", strategy,
                 "uniform | variance_topk | boundary | kl_ucb | qbc | mckg");
  app.add_option("--seed", seed, "Run seed");
  app.add_option("--lambda", lambda, "L2 regularization strength");
  app.add_option("--tol", tolerance, "Fit tolerance (gradient infinity norm)");
  app.add_option("--max-steps", max_steps, "Maximum ascent steps per fit");
  app.add_option("--cutoffs", cutoffs, "NDCG cutoffs in percent, e.g. 10,15,20,25");
  app.add_option("--shortlist", shortlist, "Shortlist fraction for boundary probing");
  app.add_option("--committee", committee, "QBC committee size");
  app.add_option("--proposals", proposals, "Random proposal subsets per iteration");
  app.add_option("--rollouts", rollouts, "MC-KG rollouts per proposal");
  app.add_flag("--prior-ordering", prior_ordering,
               "Send the current fitted order of the subset to the judge");
  app.add_flag("--early-stop", early_stop, "Stop once rankings stabilize");
  app.add_option("--stop-window", stop_window, "Early-stopping window");
  app.add_option("--stop-tau", stop_tau, "Early-stopping Kendall tau threshold");
  app.add_option("--stop-du", stop_du, "Early-stopping utility movement threshold");
  app.add_flag("--diagnostics", diagnostics, "Write diagnostics.jsonl");
  app.add_option("--judge", judge, "pl | swap | external | interactive");
  app.add_option("--beta", beta, "PL judge inverse temperature (inf allowed)");
  app.add_option("--p-swap", p_swap, "Swap judge adjacent-swap probability");
  app.add_option("--judge-seed", judge_seed, "Override the judge random stream");
  app.add_option("--retries", retries, "External judge retries per request");
  app.add_option("--timeout-ms", timeout_ms, "External judge reply timeout");
}

TournamentConfig ConfigFlags::resolve() const {
  TournamentConfig config;
  if (config_file) {
    std::ifstream in(*config_file, std::ios::binary);
    if (!in) throw UsageError("cannot open config file " + *config_file);
    try {
      config = config_from_json(Json::parse(in));
    } catch (const Json::exception& e) {
      throw UsageError("config file " + *config_file + ": " + e.what());
    } catch (const Error& e) {
      throw UsageError("config file " + *config_file + ": " + e.what());
    }
  }
  try {
    if (k) config.subset_size = *k;
    if (iters) config.iterations = *iters;
    if (strategy) config.strategy = parse_strategy(*strategy);
    if (seed) config.seed = *seed;
    if (lambda) config.lambda = *lambda;
    if (tolerance) config.fit_tolerance = *tolerance;
    if (max_steps) config.max_fit_steps = *max_steps;
    if (cutoffs) config.cutoffs = parse_cutoffs(*cutoffs);
    if (shortlist) config.shortlist_fraction = *shortlist;
    if (committee) config.qbc_committee = *committee;
    if (proposals) config.proposal_pool = *proposals;
    if (rollouts) config.mckg_rollouts = *rollouts;
    if (prior_ordering) config.prior_ordering_in_prompt = true;
    if (early_stop) config.early_stopping.enabled = true;
    if (stop_window) config.early_stopping.window = *stop_window;
    if (stop_tau) config.early_stopping.tau_threshold = *stop_tau;
    if (stop_du) config.early_stopping.du_threshold = *stop_du;
    if (diagnostics) config.dump_diagnostics = true;
    if (judge) config.judge.kind = parse_judge_kind(*judge);
    if (beta) config.judge.beta = *beta;
    if (p_swap) config.judge.p_swap = *p_swap;
    if (judge_seed) config.judge.seed = *judge_seed;
    if (retries) config.judge.retries = *retries;
    if (timeout_ms) config.judge.timeout_ms = *timeout_ms;
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return config;
}

std::vector<double> parse_cutoffs(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    double pct = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), pct);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("bad cutoff '" + std::string(item) + "' in --cutoffs");
    }
    out.push_back(pct / 100.0);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> split_command(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  char quote = 0;
  for (char c : text) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        current.push_back(c);
      }
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_token = true;
    } else if (c == ' ' || c == '\t') {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current.push_back(c);
      in_token = true;
    }
  }
  if (quote) throw UsageError("unbalanced quote in judge command");
  if (in_token) out.push_back(std::move(current));
  return out;
}

void require_valid(const TournamentConfig& config) {
  const auto violations = validate_config(config);
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "\n";
    msg += v.message + " (" + v.field + ")";
  }
  throw UsageError(msg);
}

std::filesystem::path resolve_out_dir(const std::optional<std::string>& out,
                                      const std::string& run_id) {
  if (out) return *out;
  if (const char* base = std::getenv("LISTRANK_OUT_DIR"); base && *base) {
    return std::filesystem::path(base) / run_id;
  }
  throw UsageError("no output directory: pass --out or set LISTRANK_OUT_DIR");
}

std::string format_ranking(std::span<const int> order, const CandidatePool& pool,
                           std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < order.size() && i < limit; ++i) {
    if (i) out += ' ';
    out += pool.id_of(order[i]);
  }
  if (order.size() > limit) out += " ...";
  return out;
}

void print_run_summary(std::ostream& out, const RunArtifacts& artifacts,
                       const CandidatePool& pool,
                       const std::filesystem::path& dir) {
  out << "run directory: " << dir.string() << "\n";
  out << "iterations:    " << artifacts.states.size()
      << (artifacts.stopped_early ? " (stopped early)" : "") << "\n";
  const UtilityState& final_state =
      artifacts.states.empty() ? artifacts.initial_state : artifacts.states.back();
  out << "final ranking: "
      << format_ranking(argsort_descending(final_state.u), pool, 20) << "\n";
  if (artifacts.metrics.empty()) return;
  const MetricsRecord& last = artifacts.metrics.back();
  out << fmt::format("delta_u:       {:.6f}\n", last.delta_u);
  if (last.kendall_tau_successive) {
    out << fmt::format("tau (t-1, t):  {:.6f}\n", *last.kendall_tau_successive);
  }
  if (last.kendall_tau_vs_reference) {
    out << fmt::format("tau vs ref:    {:.6f}\n", *last.kendall_tau_vs_reference);
  }
  for (const auto& [p, v] : last.ndcg) {
    out << fmt::format("ndcg@{}%: {:.6f}\n", cutoff_label(p), v);
  }
}

}  // namespace listrank::cli
