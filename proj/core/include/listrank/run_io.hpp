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

#ifndef LISTRANK_RUN_IO_HPP_
#define LISTRANK_RUN_IO_HPP_

// Run directory layout:
//   config.json        TournamentConfig
//   pool.json          copy of the pool, canonical encoding
//   observations.jsonl one RankingObservation per line
//   states.jsonl       initial state, then one UtilityState per iteration
//   metrics.csv        one row per iteration
//   diagnostics.jsonl  acquisition scores (only when enabled)
//   manifest.json      run id, timestamps, digests and status

#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "listrank/metrics.hpp"
#include "listrank/orchestrator.hpp"
#include "listrank/serialization.hpp"

namespace listrank {

namespace run_files {
inline constexpr const char* kConfig = "config.json";
inline constexpr const char* kPool = "pool.json";
inline constexpr const char* kObservations = "observations.jsonl";
inline constexpr const char* kStates = "states.jsonl";
inline constexpr const char* kMetrics = "metrics.csv";
inline constexpr const char* kDiagnostics = "diagnostics.jsonl";
inline constexpr const char* kManifest = "manifest.json";
}  // namespace run_files

std::string_view to_string(RunStatus status);

// Canonical pool.json bytes; pool_digest is the SHA-256 of these.
std::string canonical_pool_text(const CandidatePool& pool);
std::string pool_digest(const CandidatePool& pool);
std::string config_digest(const TournamentConfig& config);

// Column label for a cutoff fraction: 0.1 -> "10", 0.125 -> "12.5".
std::string cutoff_label(double fraction);

// iteration,kendall_tau_successive,delta_u[,ndcg_<pct>...],
// kendall_tau_vs_reference. NDCG columns only when with_ndcg.
std::string metrics_csv_header(std::span<const double> cutoffs, bool with_ndcg);
std::string metrics_csv_row(const MetricsRecord& record,
                            std::span<const double> cutoffs, bool with_ndcg);

// Parsed metrics.csv: column names and rows of optional cells.
struct MetricsTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  // Throws ParseError if the column is absent.
  std::vector<std::optional<double>> column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};
MetricsTable read_metrics_csv(std::istream& in);

// Strongest-first list of ids, either a JSON array or one id per line
// (blank lines and lines starting with '#' ignored). Throws LookupError
// naming ids the pool lacks and StructuralError if pool ids are missing.
std::vector<int> read_reference_ranking(const std::filesystem::path& path,
                                        const CandidatePool& pool);

// Streams a run into a directory as it progresses; on_finish writes the
// manifest with the observation log digest and final status.
class RunDirectoryWriter : public RunObserver {
 public:
  RunDirectoryWriter(std::filesystem::path dir, bool with_ndcg);

  void on_start(const RunArtifacts& artifacts,
                const CandidatePool& pool) override;
  void on_iteration(const RunArtifacts& artifacts,
                    const Selection& selection) override;
  void on_finish(const RunArtifacts& artifacts, RunStatus status) override;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  bool with_ndcg_;
  const CandidatePool* pool_ = nullptr;
  std::ofstream observations_;
  std::ofstream states_;
  std::ofstream metrics_;
  std::ofstream diagnostics_;
};

struct RunManifest {
  std::string run_id;
  std::string created_at;
  std::string config_digest;
  std::string pool_digest;
  std::string observations_digest;
  RunStatus status = RunStatus::kCompleted;
  int completed_iterations = 0;
};

Json manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const Json& json);

// Deterministic id derived from config and pool digests.
std::string make_run_id(const TournamentConfig& config,
                        std::string_view pool_digest);

std::string read_file(const std::filesystem::path& path);

}  // namespace listrank

#endif  // LISTRANK_RUN_IO_HPP_
