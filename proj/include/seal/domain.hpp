#pragma once

#include "seal/core.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace seal {

struct Successor {
    Action action;
    SearchState state;
};

/// A benchmark domain: complete decomposition, transition semantics, the rule
/// verifier, canonical keys and the text formats used in prompts. Domain
/// handles are stateless and safe to share across concurrent runs.
class Domain {
public:
    virtual ~Domain() = default;

    virtual DomainKind kind() const = 0;

    virtual std::string canonical_key(const StatePayload& payload) const = 0;

    /// Complete decomposition D(s): every child under every legal action, in
    /// a fixed deterministic order, deduplicated by canonical key within the
    /// expansion. Empty for terminal states (and, for Blocksworld, for states
    /// at the plan-length bound).
    virtual std::vector<Successor> decompose(const PlanningProblem& problem,
                                             const SearchState& state) const = 0;

    /// Transition function: applies one action. Throws std::invalid_argument
    /// if the action is not applicable in `state`.
    virtual SearchState apply(const PlanningProblem& problem, const SearchState& state,
                              const Action& action) const = 0;

    /// True when `state` is a shape in which the goal test is meaningful
    /// (single number for Game of 24, fully assigned grid for crosswords,
    /// every Blocksworld state). Searches charge one external-verifier step
    /// per goal test on such states.
    virtual bool goal_possible(const PlanningProblem& problem,
                               const SearchState& state) const = 0;

    virtual bool is_goal(const PlanningProblem& problem, const SearchState& state) const = 0;

    /// Depth bound for searches: 3 for Game of 24 (four numbers), 10 for
    /// crosswords, floor(1.2 * min_steps) for Blocksworld.
    virtual int max_depth(const PlanningProblem& problem) const = 0;

    /// Builds the full solution object for a goal state reached by search.
    virtual Solution solution_from_path(const PlanningProblem& problem,
                                        const SearchState& goal_state) const = 0;

    /// Rule verifier for a complete solution.
    virtual bool verify(const PlanningProblem& problem, const Solution& solution) const = 0;

    /// Shapes a candidate answer into a Solution without verifying it (used
    /// to grade failed attempts, e.g. letter-level crosswords credit).
    virtual std::optional<Solution> parse_solution(const PlanningProblem& problem,
                                                   const std::string& candidate_text) const = 0;

    /// Checks a direct-solve candidate produced at `state` and, when it
    /// solves the problem from there, returns the full problem-level
    /// solution (path prefix spliced in where the domain requires it).
    virtual std::optional<Solution> verify_candidate(const PlanningProblem& problem,
                                                     const SearchState& state,
                                                     const std::string& candidate_text) const = 0;

    /// Render a state the way prompts present it (e.g. "4 6 12").
    virtual std::string format_state(const PlanningProblem& problem,
                                     const SearchState& state) const = 0;

    virtual std::string format_action(const Action& action) const = 0;
    virtual std::optional<Action> parse_action(const std::string& label) const = 0;
};

const Domain& domain_for(DomainKind kind);

/// Replays a state's action path from the problem's initial state; true when
/// the replayed payload matches exactly.
bool replay_matches(const PlanningProblem& problem, const SearchState& state);

} // namespace seal
