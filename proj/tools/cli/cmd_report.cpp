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
#include "cli/svg.hpp"
#include "listrank/errors.hpp"
#include "listrank/metrics.hpp"
#include "listrank/run_io.hpp"

namespace listrank::cli {
namespace {

// Min-max scales the present values of a column, leaving gaps in place.
std::vector<std::optional<double>> normalize_present(
    const std::vector<std::optional<double>>& column) {
  std::vector<double> present;
  for (const auto& v : column) {
    if (v) present.push_back(*v);
  }
  const std::vector<double> scaled = normalize_series(present);
  std::vector<std::optional<double>> out(column.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (column[i]) out[i] = scaled[next++];
  }
  return out;
}

std::string cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.6f}", *v) : std::string();
}

void write_csv(const std::filesystem::path& path,
               const std::vector<double>& iterations,
               const std::vector<Series>& series) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << "iteration";
  for (const auto& s : series) out << "," << s.name;
  out << "\n";
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    out << fmt::format("{}", static_cast<long long>(iterations[i]));
    for (const auto& s : series) out << "," << cell(s.values[i]);
    out << "\n";
  }
}

}  // namespace

void add_report(CLI::App& app, ReportFlags& flags) {
  CLI::App* sub = app.add_subcommand(
      "report", "Emit plot-ready NDCG and convergence series for a run");
  sub->add_option("--run", flags.run, "Run directory")->required();
  sub->add_option("--out", flags.out, "Output directory (default: the run directory)");
  sub->add_flag("--svg", flags.svg, "Also write SVG line charts");
}

int cmd_report(const ReportFlags& flags, std::ostream& out, std::ostream& err) {
  const std::filesystem::path run_dir(flags.run);
  const std::filesystem::path metrics_path = run_dir / run_files::kMetrics;
  if (!std::filesystem::exists(metrics_path)) {
    err << "error: no " << run_files::kMetrics << " in " << run_dir.string() << "\n";
    return kExitFailure;
  }
  std::ifstream in(metrics_path, std::ios::binary);
  const MetricsTable table = read_metrics_csv(in);
  if (table.rows.empty()) {
    err << "error: " << metrics_path.string() << " has no iterations\n";
    return kExitFailure;
  }
  const std::filesystem::path dir = flags.out ? std::filesystem::path(*flags.out) : run_dir;
  std::filesystem::create_directories(dir);

  std::vector<double> iterations;
  for (const auto& v : table.column("iteration")) iterations.push_back(v.value_or(0.0));

  std::vector<Series> ndcg;
  for (const auto& name : table.columns) {
    if (name.starts_with("ndcg_")) ndcg.push_back({name, table.column(name)});
  }
  if (ndcg.empty()) {
    err << "warning: run has no reference ranking; skipping ndcg_progression.csv\n";
  } else {
    write_csv(dir / "ndcg_progression.csv", iterations, ndcg);
    out << "wrote " << (dir / "ndcg_progression.csv").string() << "\n";
    if (flags.svg) {
      std::vector<Series> labelled = ndcg;
      for (auto& s : labelled) s.name = "NDCG@" + s.name.substr(5) + "%";
      std::ofstream(dir / "ndcg_progression.svg", std::ios::binary)
          << line_chart_svg("NDCG@K% progression", iterations, labelled);
    }
  }

  const std::vector<Series> convergence = {
      {"kendall_tau_successive", normalize_present(table.column("kendall_tau_successive"))},
      {"delta_u", normalize_present(table.column("delta_u"))},
  };
  write_csv(dir / "convergence.csv", iterations, convergence);
  out << "wrote " << (dir / "convergence.csv").string() << "\n";
  if (flags.svg) {
    std::ofstream(dir / "convergence.svg", std::ios::binary) << line_chart_svg(
        "Convergence (each series scaled to [0, 1])", iterations, convergence);
  }
  return kExitOk;
}

}  // namespace listrank::cli
