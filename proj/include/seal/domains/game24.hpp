#pragma once

#include "seal/domain.hpp"

#include <unordered_map>

namespace seal::game24 {

class Game24Domain final : public Domain {
public:
    DomainKind kind() const override { return DomainKind::game24; }
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

std::string key_of(const Game24Payload& payload);
Game24Payload make_payload(std::vector<Rational> numbers);

PlanningProblem make_problem(std::string id, const std::vector<std::int64_t>& numbers);

/// Parses and exactly evaluates an infix expression over + - * / (unicode
/// times/divide accepted). `compound_literals` lists non-integer values whose
/// "p/q" spelling should be read as one literal rather than a division; the
/// multiset of literals read is returned through `literals`.
std::optional<Rational> eval_expression(const std::string& text,
                                        const std::vector<Rational>& compound_literals,
                                        std::vector<Rational>* literals);

/// Rule verifier: true iff `text` parses, uses exactly the problem's numbers,
/// and evaluates to 24 under exact rational arithmetic.
bool verify_expression(const PlanningProblem& problem, const std::string& text);

/// True iff `text` is an expression using exactly `numbers` (as a multiset)
/// that evaluates to 24.
bool expression_solves(const std::vector<Rational>& numbers, const std::string& text);

/// Ground-truth reachability of 24 from a number multiset, by direct
/// enumeration of all pair-merge expressions. Memoized across queries.
class ReachOracle {
public:
    bool reachable(const std::vector<Rational>& numbers);
    /// First found expression over `numbers` evaluating to 24 (no "= 24"
    /// suffix), or nullopt when 24 is unreachable.
    std::optional<std::string> expression(const std::vector<Rational>& numbers);

private:
    std::unordered_map<std::string, bool> memo_;
};

/// Rewrites an expression over `state`'s numbers into one over the problem's
/// original numbers by substituting each number's derivation from the path.
std::optional<std::string> splice_expression(const PlanningProblem& problem,
                                             const SearchState& state,
                                             const std::string& expr_over_state);

} // namespace seal::game24
