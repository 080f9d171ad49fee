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

#include "listrank/run_io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "listrank/digest.hpp"
#include "listrank/errors.hpp"

namespace listrank {
namespace {

std::string format_cell(std::optional<double> v) {
  return v ? fmt::format("{:.6f}", *v) : std::string();
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  ::gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kCompleted: return "completed";
    case RunStatus::kPartial: return "partial";
    case RunStatus::kFailed: return "failed";
  }
  return "unknown";
}

std::string canonical_pool_text(const CandidatePool& pool) {
  return pool_to_json(pool).dump(2) + "\n";
}

std::string pool_digest(const CandidatePool& pool) {
  return sha256_hex(canonical_pool_text(pool));
}

std::string config_digest(const TournamentConfig& config) {
  return sha256_hex(config_to_json(config).dump());
}

std::string cutoff_label(double fraction) {
  return fmt::format("{}", std::round(fraction * 100.0 * 1e6) / 1e6);
}

std::string metrics_csv_header(std::span<const double> cutoffs, bool with_ndcg) {
  std::string out = "iteration,kendall_tau_successive,delta_u";
  if (with_ndcg) {
    for (double p : cutoffs) out += ",ndcg_" + cutoff_label(p);
  }
  out += ",kendall_tau_vs_reference";
  return out;
}

std::string metrics_csv_row(const MetricsRecord& record,
                            std::span<const double> cutoffs, bool with_ndcg) {
  std::string out = std::to_string(record.iteration);
  out += "," + format_cell(record.kendall_tau_successive);
  out += "," + format_cell(record.delta_u);
  if (with_ndcg) {
    for (double p : cutoffs) {
      auto it = record.ndcg.find(p);
      out += "," + format_cell(it == record.ndcg.end()
                                   ? std::nullopt
                                   : std::optional<double>(it->second));
    }
  }
  out += "," + format_cell(record.kendall_tau_vs_reference);
  return out;
}

bool MetricsTable::has_column(std::string_view name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

std::vector<std::optional<double>> MetricsTable::column(
    std::string_view name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw ParseError("metrics table has no column " + std::string(name));
  }
  const auto index = static_cast<std::size_t>(it - columns.begin());
  std::vector<std::optional<double>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[index]);
  return out;
}

MetricsTable read_metrics_csv(std::istream& in) {
  MetricsTable table;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("metrics file is empty");
  table.columns = split(trim(line), ',');
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    line = trim(line);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != table.columns.size()) {
      throw ParseError("expected " + std::to_string(table.columns.size()) +
                           " cells",
                       number);
    }
    std::vector<std::optional<double>> row;
    for (const auto& cell : cells) {
      if (cell.empty()) {
        row.emplace_back();
        continue;
      }
      try {
        row.emplace_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError("not a number: " + cell, number);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<int> read_reference_ranking(const std::filesystem::path& path,
                                        const CandidatePool& pool) {
  const std::string text = trim(read_file(path));
  std::vector<std::string> ids;
  if (!text.empty() && text.front() == '[') {
    Json j;
    try {
      j = Json::parse(text);
      ids = j.get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
      throw ParseError("reference ranking must be a JSON array of ids: " +
                       std::string(e.what()));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      ids.push_back(line);
    }
  }
  std::vector<int> out;
  std::set<int> seen;
  for (const auto& id : ids) {
    const int index = pool.index_of(id);
    if (!seen.insert(index).second) {
      throw StructuralError("reference ranking repeats id " + id);
    }
    out.push_back(index);
  }
  if (out.size() != pool.size()) {
    std::string missing;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!seen.contains(static_cast<int>(i))) {
        missing += (missing.empty() ? "" : ", ") + pool.id_of(i);
      }
    }
    throw StructuralError("reference ranking is missing ids: " + missing);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunDirectoryWriter::RunDirectoryWriter(std::filesystem::path dir, bool with_ndcg)
    : dir_(std::move(dir)), with_ndcg_(with_ndcg) {}

void RunDirectoryWriter::on_start(const RunArtifacts& artifacts,
                                  const CandidatePool& pool) {
  std::filesystem::create_directories(dir_);
  pool_ = &pool;
  {
    std::ofstream config(dir_ / run_files::kConfig, std::ios::binary);
    config << config_to_json(artifacts.config).dump(2) << "\n";
    std::ofstream pool_file(dir_ / run_files::kPool, std::ios::binary);
    pool_file << canonical_pool_text(pool);
  }
  auto open = [this](std::ofstream& out, const char* name) {
    out.open(dir_ / name, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + (dir_ / name).string());
  };
  open(observations_, run_files::kObservations);
  open(states_, run_files::kStates);
  open(metrics_, run_files::kMetrics);
  if (artifacts.config.dump_diagnostics) {
    open(diagnostics_, run_files::kDiagnostics);
  } else {
    std::filesystem::remove(dir_ / run_files::kDiagnostics);
  }
  std::filesystem::remove(dir_ / run_files::kManifest);
  states_ << encode_state(artifacts.initial_state) << "\n" << std::flush;
  metrics_ << metrics_csv_header(artifacts.config.cutoffs, with_ndcg_) << "\n"
           << std::flush;
}

void RunDirectoryWriter::on_iteration(const RunArtifacts& artifacts,
                                      const Selection& selection) {
  observations_ << encode_observation(artifacts.observations.back(), *pool_)
                << "\n" << std::flush;
  states_ << encode_state(artifacts.states.back()) << "\n" << std::flush;
  metrics_ << metrics_csv_row(artifacts.metrics.back(),
                              artifacts.config.cutoffs, with_ndcg_)
           << "\n" << std::flush;
  if (diagnostics_.is_open()) {
    Json proposals = Json::array();
    for (const auto& p : selection.proposals) {
      Json item;
      item["indices"] = p.indices;
      item["score"] = p.score;
      proposals.push_back(std::move(item));
    }
    Json j;
    j["iteration"] = artifacts.states.back().iteration;
    j["strategy"] = std::string(to_string(artifacts.config.strategy));
    j["proposals"] = std::move(proposals);
    diagnostics_ << j.dump() << "\n" << std::flush;
  }
}

void RunDirectoryWriter::on_finish(const RunArtifacts& artifacts,
                                   RunStatus status) {
  observations_.close();
  states_.close();
  metrics_.close();
  if (diagnostics_.is_open()) diagnostics_.close();

  RunManifest manifest;
  manifest.pool_digest = artifacts.pool_digest;
  manifest.config_digest = config_digest(artifacts.config);
  manifest.run_id = make_run_id(artifacts.config, artifacts.pool_digest);
  manifest.created_at = utc_timestamp();
  manifest.observations_digest =
      sha256_hex(read_file(dir_ / run_files::kObservations));
  manifest.status = status;
  manifest.completed_iterations = static_cast<int>(artifacts.states.size());
  std::ofstream out(dir_ / run_files::kManifest, std::ios::binary);
  out << manifest_to_json(manifest).dump(2) << "\n";
}

Json manifest_to_json(const RunManifest& m) {
  Json j;
  j["run_id"] = m.run_id;
  j["created_at"] = m.created_at;
  j["config_digest"] = m.config_digest;
  j["pool_digest"] = m.pool_digest;
  j["observations_digest"] = m.observations_digest;
  j["status"] = std::string(to_string(m.status));
  j["completed_iterations"] = m.completed_iterations;
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  try {
    m.run_id = j.at("run_id").get<std::string>();
    m.created_at = j.at("created_at").get<std::string>();
    m.config_digest = j.at("config_digest").get<std::string>();
    m.pool_digest = j.at("pool_digest").get<std::string>();
    m.observations_digest = j.at("observations_digest").get<std::string>();
    m.completed_iterations = j.at("completed_iterations").get<int>();
    const auto status = j.at("status").get<std::string>();
    if (status == "completed") {
      m.status = RunStatus::kCompleted;
    } else if (status == "partial") {
      m.status = RunStatus::kPartial;
    } else if (status == "failed") {
      m.status = RunStatus::kFailed;
    } else {
      throw ParseError("unknown run status " + status);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string make_run_id(const TournamentConfig& config,
                        std::string_view pool_digest) {
  const std::string digest =
      sha256_hex(config_digest(config) + std::string(pool_digest));
  return std::string(to_string(config.strategy)) + "-s" +
         std::to_string(config.seed) + "-" + digest.substr(0, 12);
}

}  // namespace listrank
