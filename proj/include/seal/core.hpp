#pragma once

#include "seal/rational.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace seal {

enum class DomainKind { game24, crosswords, blocksworld };

std::string to_string(DomainKind kind);
std::optional<DomainKind> domain_kind_from(const std::string& name);

// ---------------------------------------------------------------------------
// Step accounting
// ---------------------------------------------------------------------------

/// The six charge categories making up a run's search steps (SS).
enum class StepKind {
    llm_answerer,
    llm_validity,
    llm_ranking,
    ext_decomposition,
    ext_verifier,
    ext_traversed,
};

struct SearchStats {
    std::int64_t llm_answerer_calls = 0;
    std::int64_t llm_validity_calls = 0;
    std::int64_t llm_ranking_calls = 0;
    std::int64_t ext_decomposition_calls = 0;
    std::int64_t ext_verifier_calls = 0;
    std::int64_t ext_traversed_states = 0;

    std::int64_t llm_total() const {
        return llm_answerer_calls + llm_validity_calls + llm_ranking_calls;
    }
    std::int64_t ext_total() const {
        return ext_decomposition_calls + ext_verifier_calls + ext_traversed_states;
    }
    std::int64_t total_ss() const { return llm_total() + ext_total(); }
};

struct SearchBudget {
    std::optional<std::int64_t> max_ss;
    std::optional<std::chrono::milliseconds> deadline;
};

/// Thrown when charging one more step would push total SS past the budget.
/// The run that catches it reports unsolved with the stats accumulated so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("search step budget exceeded") {}
};

class DeadlineExceeded : public std::runtime_error {
public:
    DeadlineExceeded() : std::runtime_error("wall-clock deadline exceeded") {}
};

/// Thrown by an advisor when its transport gives up after retries.
class AdvisorUnavailable : public std::runtime_error {
public:
    explicit AdvisorUnavailable(const std::string& why)
        : std::runtime_error("advisor unavailable: " + why) {}
};

/// Per-run step ledger. Budget is checked before every charge so a finished
/// run's total SS never exceeds max_ss.
class StepLedger {
public:
    explicit StepLedger(SearchBudget budget = {})
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    void charge(StepKind kind, std::int64_t n = 1);
    void note_retries(std::int64_t n) { retries_ += n; }
    void check_deadline() const;

    const SearchStats& stats() const { return stats_; }
    std::int64_t retries() const { return retries_; }
    const SearchBudget& budget() const { return budget_; }

private:
    SearchStats stats_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::int64_t retries_ = 0;
};

// ---------------------------------------------------------------------------
// States, actions, problems
// ---------------------------------------------------------------------------

struct Game24Move {
    Rational lhs, rhs, result;
    char op = '+';
    friend bool operator==(const Game24Move&, const Game24Move&) = default;
};

struct CrosswordsMove {
    int clue = 0; // 0-4 = h1..h5, 5-9 = v1..v5
    std::string word;
    friend bool operator==(const CrosswordsMove&, const CrosswordsMove&) = default;
};

struct BlocksMove {
    std::string verb; // pickup | put | stack | unstack
    std::string a, b; // b empty for pickup/put
    friend bool operator==(const BlocksMove&, const BlocksMove&) = default;
};

struct Action {
    std::string label;
    std::variant<std::monostate, Game24Move, CrosswordsMove, BlocksMove> move;
    friend bool operator==(const Action&, const Action&) = default;
};

struct Game24Payload {
    std::vector<Rational> numbers; // kept sorted ascending
    friend bool operator==(const Game24Payload&, const Game24Payload&) = default;
};

struct CrosswordsPayload {
    std::array<int, 10> choice; // candidate index per clue, -1 unassigned
    CrosswordsPayload() { choice.fill(-1); }
    int assigned_count() const {
        int n = 0;
        for (int c : choice) n += (c >= 0);
        return n;
    }
    friend bool operator==(const CrosswordsPayload&, const CrosswordsPayload&) = default;
};

struct BlocksPayload {
    // block -> what it rests on ("#table" or a block name); held blocks are
    // absent from `below` and named in `held` (empty = arm free).
    std::map<std::string, std::string> below;
    std::string held;
    friend bool operator==(const BlocksPayload&, const BlocksPayload&) = default;
};

using StatePayload = std::variant<Game24Payload, CrosswordsPayload, BlocksPayload>;

struct SearchState {
    StatePayload payload;
    std::vector<Action> path;
    std::string key; // canonical key, filled in by the owning domain

    int depth() const { return static_cast<int>(path.size()); }
};

struct CrosswordsGrid {
    std::array<std::array<char, 5>, 5> cell; // uppercase letters
    std::string row_text() const;            // 5 lines "R I L L E"
    friend bool operator==(const CrosswordsGrid&, const CrosswordsGrid&) = default;
};

struct CrosswordsProblemData {
    std::array<std::string, 10> clues;
    std::array<std::vector<std::string>, 10> candidates;
    std::optional<CrosswordsGrid> ground_truth;
};

struct BlocksProblemData {
    std::vector<std::string> blocks;
    std::set<std::string> goal; // canonical predicate strings, e.g. "on(a,b)"
    int min_steps = 0;          // BFS-optimal plan length from the initial state
};

struct Game24ProblemData {};

struct PlanningProblem {
    std::string problem_id;
    DomainKind kind = DomainKind::game24;
    SearchState initial_state;
    std::variant<Game24ProblemData, CrosswordsProblemData, BlocksProblemData> data;
    std::map<std::string, std::string> metadata;
    int difficulty_rank = 0;

    const CrosswordsProblemData& crosswords() const {
        return std::get<CrosswordsProblemData>(data);
    }
    const BlocksProblemData& blocks() const { return std::get<BlocksProblemData>(data); }
};

// ---------------------------------------------------------------------------
// Solutions and run records
// ---------------------------------------------------------------------------

struct BlocksPlan {
    std::vector<BlocksMove> steps;
    friend bool operator==(const BlocksPlan&, const BlocksPlan&) = default;
};

/// A domain solution in canonical printable form. Game-of-24 solutions live
/// entirely in `text` (an expression such as "(6 - 4) * (4 + 8) = 24").
struct Solution {
    DomainKind kind = DomainKind::game24;
    std::string text;
    std::variant<std::monostate, CrosswordsGrid, BlocksPlan> body;
};

struct RunRecord {
    std::string problem_id;
    std::string algorithm_id;
    std::string advisor_id;
    bool solved = false;
    std::optional<Solution> solution;
    SearchStats stats;
    std::int64_t retries = 0;
    double elapsed_ms = 0.0;
    std::string config_hash;
    std::optional<std::int64_t> budget_max_ss;
    std::string failure; // "", "budget_exceeded", "deadline", "advisor_unavailable"
    std::map<std::string, double> metrics; // e.g. crosswords letter/word/game PR
    std::vector<std::string> visit_trace;  // populated only when tracing is on
};

} // namespace seal
