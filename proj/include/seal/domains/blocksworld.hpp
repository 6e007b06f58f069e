#pragma once

#include "seal/domain.hpp"

namespace seal::blocks {

class BlocksworldDomain final : public Domain {
public:
    DomainKind kind() const override { return DomainKind::blocksworld; }
    std::string canonical_key(const StatePayload& payload) const override;
    std::vector<Successor> decompose(const PlanningProblem& problem,
                                     const SearchState& state) const override;
    SearchState apply(const PlanningProblem& problem, const SearchState& state,
                      const Action& action) const override;
    bool goal_possible(const PlanningProblem& problem, const SearchState& state) const override;
    bool is_goal(const PlanningProblem& problem, const SearchState& state) const override;
    int max_depth(const PlanningProblem& problem) const override;
    Solution solution_from_path(const PlanningProblem& problem,
                                const SearchState& goal_state) const override;
    bool verify(const PlanningProblem& problem, const Solution& solution) const override;
    std::optional<Solution> parse_solution(const PlanningProblem& problem,
                                           const std::string& candidate_text) const override;
    std::optional<Solution> verify_candidate(const PlanningProblem& problem,
                                             const SearchState& state,
                                             const std::string& candidate_text) const override;
    std::string format_state(const PlanningProblem& problem,
                             const SearchState& state) const override;
    std::string format_action(const Action& action) const override;
    std::optional<Action> parse_action(const std::string& label) const override;
};

/// Full predicate set derived from a payload: on(x,y), on_table(x), clear(x),
/// holding(x), arm_empty.
std::set<std::string> predicates_of(const BlocksPayload& payload);

std::string key_of(const BlocksPayload& payload);

/// Builds a payload from predicate strings; throws std::invalid_argument on
/// anything that violates the one-support-per-block invariants.
BlocksPayload payload_from_predicates(const std::vector<std::string>& predicates);

/// All applicable moves in a fixed deterministic order (pickup, unstack, put,
/// stack; blocks in name order), each paired with its successor payload.
std::vector<std::pair<BlocksMove, BlocksPayload>> applicable_moves(const BlocksPayload& payload);

/// Applies one move; throws std::invalid_argument when a precondition fails.
BlocksPayload apply_move(const BlocksPayload& payload, const BlocksMove& move);

/// BFS-optimal plan length from `start` to the goal predicates; -1 when
/// unreachable.
int bfs_min_steps(const BlocksPayload& start, const std::set<std::string>& goal);

/// Optimal plan found by the same BFS, or nullopt when unreachable.
std::optional<std::vector<BlocksMove>> bfs_plan(const BlocksPayload& start,
                                                const std::set<std::string>& goal);

/// Plan-level rule verifier: simulates every step from the initial state,
/// requires the goal at the end and |steps| <= floor(1.2 * min_steps).
bool validate_plan(const PlanningProblem& problem, const BlocksPlan& plan);

PlanningProblem make_problem(std::string id, const std::vector<std::string>& blocks,
                             const std::vector<std::string>& init,
                             const std::vector<std::string>& goal, int min_steps);

} // namespace seal::blocks
