#pragma once

#include "seal/domain.hpp"

#include <unordered_map>

namespace seal::crosswords {

class CrosswordsDomain final : public Domain {
public:
    DomainKind kind() const override { return DomainKind::crosswords; }
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

std::string clue_name(int clue);               // 0..9 -> h1..h5, v1..v5
std::optional<int> clue_from_name(const std::string& name);

/// Word currently assigned to a clue, or empty.
std::string assigned_word(const PlanningProblem& problem, const CrosswordsPayload& payload,
                          int clue);

/// Letter pinned at (row, col) by the assigned words, or 0 when open.
char letter_at(const PlanningProblem& problem, const CrosswordsPayload& payload, int row,
               int col);

/// True when `word` can be placed for `clue` without contradicting any letter
/// already pinned by crossing assignments.
bool placement_consistent(const PlanningProblem& problem, const CrosswordsPayload& payload,
                          int clue, const std::string& word);

CrosswordsGrid grid_of(const PlanningProblem& problem, const CrosswordsPayload& payload);

/// (letter_pr, word_pr, game_pr) of a solution grid against the ground truth.
struct Score {
    double letter_pr = 0.0;
    double word_pr = 0.0;
    int game_pr = 0;
};
Score score_grid(const CrosswordsGrid& solution, const CrosswordsGrid& truth);

PlanningProblem make_problem(std::string id, CrosswordsProblemData data);

/// Ground-truth completion oracle: backtracking over candidate words with
/// crossing-consistency filtering, memoized by canonical key.
class CompletionOracle {
public:
    explicit CompletionOracle(const PlanningProblem& problem) : problem_(problem) {}
    bool completable(const CrosswordsPayload& payload);
    std::optional<CrosswordsPayload> complete(const CrosswordsPayload& payload);

private:
    const PlanningProblem& problem_;
    std::unordered_map<std::string, bool> memo_;
};

} // namespace seal::crosswords
