#pragma once

#include "seal/advisor.hpp"
#include "seal/algorithms.hpp"
#include "seal/domains/blocksworld.hpp"
#include "seal/domains/crosswords.hpp"
#include "seal/domains/game24.hpp"

#include <random>

namespace seal::test {

inline PlanningProblem g24(std::initializer_list<std::int64_t> numbers,
                           const std::string& id = "g24-test") {
    return game24::make_problem(id, std::vector<std::int64_t>(numbers));
}

inline SearchState g24_state(const PlanningProblem& problem,
                             std::initializer_list<std::int64_t> numbers) {
    SearchState s;
    std::vector<Rational> nums(numbers.begin(), numbers.end());
    s.payload = game24::make_payload(nums);
    s.key = game24::key_of(std::get<Game24Payload>(s.payload));
    (void)problem;
    return s;
}

inline RunRecord run(const PlanningProblem& problem, const Advisor& advisor, AlgorithmConfig cfg,
                     SearchBudget budget = {}, bool trace = false) {
    RunOptions opts;
    opts.algorithm = cfg;
    opts.budget = budget;
    opts.record_trace = trace;
    return run_algorithm(problem, advisor, opts);
}

inline AlgorithmConfig algo(AlgorithmId id) {
    AlgorithmConfig cfg;
    cfg.id = id;
    return cfg;
}

/// Independent test-side reachability: searches the decomposition graph with
/// plain BFS, never consulting the expression enumerator the library uses.
inline bool decompose_search_reaches_24(const PlanningProblem& problem) {
    const Domain& dom = domain_for(DomainKind::game24);
    std::vector<SearchState> frontier{problem.initial_state};
    std::set<std::string> seen{problem.initial_state.key};
    while (!frontier.empty()) {
        SearchState s = std::move(frontier.back());
        frontier.pop_back();
        if (dom.is_goal(problem, s)) return true;
        for (Successor& succ : dom.decompose(problem, s)) {
            if (!seen.insert(succ.state.key).second) continue;
            frontier.push_back(std::move(succ.state));
        }
    }
    return false;
}

/// Random blocksworld configuration over `n` named blocks, arm empty.
inline BlocksPayload random_blocks(std::mt19937_64& rng, int n) {
    BlocksPayload p;
    std::vector<std::string> tops;
    for (int i = 0; i < n; ++i) {
        std::string name(1, static_cast<char>('a' + i));
        std::size_t pick = std::uniform_int_distribution<std::size_t>(0, tops.size())(rng);
        if (pick == tops.size()) {
            p.below[name] = "#table";
            tops.push_back(name);
        } else {
            p.below[name] = tops[pick];
            tops[pick] = name;
        }
    }
    return p;
}

} // namespace seal::test
