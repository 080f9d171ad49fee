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

#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "listrank/errors.hpp"
#include "listrank/metrics.hpp"
#include "listrank/pl_engine.hpp"
#include "listrank/run_io.hpp"

namespace listrank::cli {
namespace {

struct Scored {
  std::optional<CandidatePool> pool;
  std::vector<double> u;
};

UtilityState last_state(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return decode_state(text);
  } catch (const ParseError&) {
    std::istringstream in(text);
    auto states = read_states(in);
    if (states.empty()) throw ParseError("no state in " + path.string());
    return states.back();
  }
}

Scored load_scores(const EvaluateFlags& flags) {
  Scored scored;
  const int sources = (flags.run ? 1 : 0) + (flags.state ? 1 : 0) +
                      (flags.utilities ? 1 : 0);
  if (sources != 1) {
    throw UsageError("pass exactly one of --run, --state or --utilities");
  }
  if (flags.run) {
    const std::filesystem::path dir(*flags.run);
    scored.pool.emplace(load_pool((dir / run_files::kPool).string()));
    scored.u = last_state(dir / run_files::kStates).u;
  } else if (flags.state) {
    if (!flags.pool) throw UsageError("--state needs --pool for candidate ids");
    scored.pool.emplace(load_pool(*flags.pool));
    scored.u = last_state(*flags.state).u;
  } else {
    const Json j = Json::parse(read_file(*flags.utilities));
    if (!j.is_object()) throw ParseError("utilities file must map ids to numbers");
    std::vector<Candidate> candidates;
    for (const auto& [id, value] : j.items()) {
      if (!value.is_number()) throw ParseError("utility of " + id + " is not a number");
      candidates.push_back({id, id, std::nullopt, std::nullopt});
      scored.u.push_back(value.get<double>());
    }
    scored.pool.emplace(std::move(candidates));
  }
  if (scored.u.size() != scored.pool->size()) {
    throw StructuralError("state has " + std::to_string(scored.u.size()) +
                          " utilities for a pool of " +
                          std::to_string(scored.pool->size()));
  }
  return scored;
}

}  // namespace

void add_evaluate(CLI::App& app, EvaluateFlags& flags) {
  CLI::App* sub = app.add_subcommand(
      "evaluate", "Score fitted utilities against a reference ranking");
  sub->add_option("--run", flags.run, "Run directory (uses its last state)");
  sub->add_option("--state", flags.state, "State file (JSON or states.jsonl)");
  sub->add_option("--pool", flags.pool, "Pool file giving the ids of --state");
  sub->add_option("--utilities", flags.utilities, "JSON object mapping id to utility");
  sub->add_option("--reference", flags.reference, "Reference ranking file")->required();
  sub->add_option("--cutoffs", flags.cutoffs, "NDCG cutoffs in percent")
      ->capture_default_str();
  sub->add_option("--csv", flags.csv, "Also write the table as CSV");
}

int cmd_evaluate(const EvaluateFlags& flags, std::ostream& out,
                 std::ostream& err) {
  const std::vector<double> cutoffs = parse_cutoffs(flags.cutoffs);
  Scored scored;
  std::vector<int> reference;
  try {
    scored = load_scores(flags);
    reference = read_reference_ranking(flags.reference, *scored.pool);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  const int n = static_cast<int>(scored.pool->size());
  for (double p : cutoffs) {
    if (!(p > 0.0 && p <= 1.0) || cutoff_count(p, n) < 1) {
      throw UsageError("cutoff " + cutoff_label(p) + "% selects no candidates");
    }
  }

  const std::vector<int> predicted = argsort_descending(scored.u);
  std::vector<std::string> header;
  std::vector<std::string> row;
  for (double p : cutoffs) {
    header.push_back("ndcg_" + cutoff_label(p));
    row.push_back(fmt::format("{:.6f}", ndcg_at(predicted, reference, p)));
  }
  header.push_back("kendall_tau_vs_reference");
  row.push_back(fmt::format("{:.6f}", kendall_tau(predicted, reference)));

  for (std::size_t i = 0; i < header.size(); ++i) {
    out << fmt::format("{:<{}}", header[i], std::max<std::size_t>(header[i].size(), 8) + 2);
  }
  out << "\n";
  for (std::size_t i = 0; i < row.size(); ++i) {
    out << fmt::format("{:<{}}", row[i], std::max<std::size_t>(header[i].size(), 8) + 2);
  }
  out << "\n";

  if (flags.csv) {
    std::ofstream csv(*flags.csv, std::ios::binary);
    if (!csv) throw Error("cannot write " + *flags.csv);
    for (std::size_t i = 0; i < header.size(); ++i) csv << (i ? "," : "") << header[i];
    csv << "\n";
    for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << row[i];
    csv << "\n";
  }
  return kExitOk;
}

}  // namespace listrank::cli
