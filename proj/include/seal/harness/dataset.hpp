#pragma once

#include "seal/harness/config.hpp"

#include <array>
#include <vector>

namespace seal::harness {

/// Loads and validates one dataset file; throws DatasetError naming the
/// offending row/field. Blocksworld min_steps values are recomputed with the
/// BFS oracle and any mismatch is an error.
std::vector<PlanningProblem> load_dataset(DomainKind kind, const std::string& path);

/// load_dataset plus the ref's index slice.
std::vector<PlanningProblem> load_dataset(const DatasetRef& ref);

/// Stable tercile split by difficulty_rank (ties by position); bucket sizes
/// differ by at most one. Returns indices into `problems`.
std::array<std::vector<std::size_t>, 3> bucket_difficulty(
    const std::vector<PlanningProblem>& problems);

} // namespace seal::harness
