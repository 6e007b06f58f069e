#pragma once

#include "seal/advisor.hpp"
#include "seal/algorithms.hpp"
#include "seal/core.hpp"

#include <string>
#include <vector>

namespace seal::harness {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& why) : std::runtime_error(why) {}
};

class DatasetError : public std::runtime_error {
public:
    explicit DatasetError(const std::string& why) : std::runtime_error(why) {}
};

struct DatasetRef {
    DomainKind kind = DomainKind::game24;
    std::string path;
    std::optional<int> index_lo; // inclusive slice on the dataset's index column
    std::optional<int> index_hi;
};

struct ExperimentConfig {
    std::vector<DatasetRef> datasets;
    std::vector<AlgorithmConfig> algorithms;
    AdvisorSpec advisor;
    SearchBudget budget;
    std::vector<std::int64_t> budget_sweep; // empty = single run at `budget`
    std::optional<int> difficulty_level;    // 1..3 tercile filter
    std::optional<std::pair<int, int>> min_steps_range; // blocksworld filter
    std::string output_path = "records.jsonl";
    int workers = 1;
    bool record_trace = false;
    std::string config_hash; // stable digest of the resolved config
};

/// Parses a JSON config document. "${VAR}" in any string value is replaced
/// with the environment variable's value. Throws ConfigError.
ExperimentConfig parse_config_text(const std::string& json_text);

/// Reads and parses a config file.
ExperimentConfig load_config(const std::string& path);

/// Stable digest over the fully-resolved config.
std::string hash_config(const ExperimentConfig& config);

std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t value);

} // namespace seal::harness
