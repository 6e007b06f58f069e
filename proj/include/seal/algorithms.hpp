#pragma once

#include "seal/advisor.hpp"
#include "seal/core.hpp"
#include "seal/domain.hpp"

#include <functional>
#include <set>

namespace seal {

enum class AlgorithmId {
    exhaustive,
    dfs,
    bfs,
    dfs_prune,
    bfs_prune,
    cot,
    majority_vote,
    best_of_n,
    beam,
    beam_rv,
    seal,
    seal_c,
};

std::string to_string(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from(const std::string& name);
bool is_traditional(AlgorithmId id);

struct AlgorithmConfig {
    AlgorithmId id = AlgorithmId::dfs;
    int n_samples = 0;    // 0 = per-algorithm default (majority vote 10, best-of-N 20)
    int beam_width = 5;
    int eval_samples = 3; // beam / best-of-N bucket samples per evaluation
    std::set<std::string> ablation_flags; // no_validity | no_direct_solve | no_ranking | no_verifier

    bool has_flag(const std::string& flag) const { return ablation_flags.count(flag) > 0; }

    /// Stable identifier, e.g. "seal", "seal/V", "seal/V/D/R", "seal/NV".
    std::string id_string() const;

    /// Parses id_string() forms back into a config (flags only apply to
    /// seal/seal_c). Returns nullopt on unknown names.
    static std::optional<AlgorithmConfig> parse(const std::string& text);
};

/// Per-expansion record emitted by SeaL-C for the phase-cover property.
struct SealCExpansion {
    std::string parent_key;
    std::vector<std::string> phase1_keys;
    std::vector<std::string> phase2_keys;
    std::vector<std::string> decomposition_keys;
};

struct RunOptions {
    AlgorithmConfig algorithm;
    SearchBudget budget;
    bool record_trace = false;
    std::string config_hash;
    std::function<void(const SealCExpansion&)> seal_c_observer; // test hook
};

/// Runs one algorithm on one problem against one advisor and returns the
/// finished record (stats identity, budget handling and solution
/// re-verification included). Traditional searches ignore the advisor.
RunRecord run_algorithm(const PlanningProblem& problem, const Advisor& advisor,
                        const RunOptions& options);

} // namespace seal
