#pragma once

#include "seal/harness/config.hpp"

#include <iosfwd>
#include <vector>

namespace seal::harness {

/// One JSONL line per record; inverse of parse_record_line.
std::string record_to_line(const RunRecord& record);
std::optional<RunRecord> parse_record_line(const std::string& line);

/// Records already present in a JSONL output file (for resumability).
std::vector<RunRecord> read_records(const std::string& path);

/// Problems selected by the config (datasets loaded, filters applied).
std::vector<PlanningProblem> load_problems(const ExperimentConfig& config);

/// Executes the problem x algorithm x budget matrix, appending each finished
/// record to config.output_path immediately (crash-safe; reruns skip keys
/// already on disk). Returns all records, previously existing ones included.
/// An advisor that fails mid-matrix produces failure rows; the run continues.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config,
                                      std::ostream* progress = nullptr);

} // namespace seal::harness
