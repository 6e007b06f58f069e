#include "support.hpp"

#include <doctest.h>

using namespace seal;
using namespace seal::test;

namespace {

std::unique_ptr<AdvisorSession> session_for(const std::shared_ptr<Advisor>& advisor,
                                            const PlanningProblem& problem,
                                            StepLedger& ledger) {
    return advisor->start(problem, ledger);
}

std::vector<SearchState> children_of(const PlanningProblem& p, const SearchState& s) {
    std::vector<SearchState> out;
    for (Successor& succ : domain_for(p.kind).decompose(p, s)) out.push_back(succ.state);
    return out;
}

} // namespace

TEST_CASE("perfect oracle solves solvable states and stays silent on unsolvable ones") {
    PlanningProblem p = g24({4, 4, 6, 8});
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    auto session = session_for(advisor, p, ledger);

    CandidateSolution cand = session->direct_solve(p.initial_state);
    REQUIRE(cand.parsed.has_value());
    CHECK(game24::verify_expression(p, *cand.parsed));
    CHECK(ledger.stats().llm_answerer_calls == 1);

    PlanningProblem q = g24({1, 1});
    StepLedger ledger2;
    auto session2 = session_for(advisor, q, ledger2);
    CHECK_FALSE(session2->direct_solve(q.initial_state).parsed.has_value());
}

TEST_CASE("null advisor: no candidates, keep everything, uniform ranks, empty proposals") {
    PlanningProblem p = g24({4, 5, 6, 10});
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "null"});
    auto session = session_for(advisor, p, ledger);

    CHECK_FALSE(session->direct_solve(p.initial_state).parsed.has_value());
    auto kids = children_of(p, p.initial_state);
    ValidityVerdict verdict = session->check_validity(kids);
    REQUIRE(verdict.per_state.size() == kids.size());
    for (const auto& e : verdict.per_state) CHECK(e.keep);
    RankedStates ranked = session->rank_states(kids, 1);
    for (std::size_t i = 0; i < kids.size(); ++i)
        CHECK(ranked.ordering[i] == static_cast<int>(i)); // stable: original order kept
    for (double s : ranked.scores) CHECK(s == doctest::Approx(0.5));
    ProposedDecomposition prop = session->propose_decomposition(p.initial_state, 0);
    CHECK(prop.proposed.empty());
    CHECK(prop.source == ProposedDecomposition::Source::fallback);
}

TEST_CASE("validity verdicts match ground truth for the perfect oracle") {
    PlanningProblem p = g24({4, 5, 6, 10});
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    auto session = session_for(advisor, p, ledger);

    std::vector<SearchState> batch{g24_state(p, {8, 3, 1}), g24_state(p, {6, 4}),
                                   g24_state(p, {7, 7, 2})};
    ValidityVerdict verdict = session->check_validity(batch);
    REQUIRE(verdict.per_state.size() == 3);
    CHECK(verdict.per_state[1].keep); // {6,4} reaches 24
    CHECK(ledger.stats().llm_validity_calls == 1);

    std::vector<SearchState> pair{g24_state(p, {24}), g24_state(p, {12})};
    verdict = session->check_validity(pair);
    CHECK(verdict.per_state[0].keep);
    CHECK_FALSE(verdict.per_state[1].keep);

    // keep always equals the strict majority of the vote trace
    for (std::size_t i = 0; i < verdict.per_state.size(); ++i) {
        int yes = 0;
        for (bool b : verdict.vote_trace[i]) yes += b;
        CHECK(verdict.per_state[i].keep ==
              (yes * 2 > static_cast<int>(verdict.vote_trace[i].size())));
    }
}

TEST_CASE("perfect oracle ranking scores exactly the reachable substates 1.0") {
    PlanningProblem p = g24({4, 5, 6, 10});
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    auto session = session_for(advisor, p, ledger);
    game24::ReachOracle reference;

    auto kids = children_of(p, p.initial_state);
    RankedStates ranked = session->rank_states(kids, 1);
    REQUIRE(ranked.ordering.size() == kids.size());
    // ordering is a permutation
    std::set<int> ids(ranked.ordering.begin(), ranked.ordering.end());
    CHECK(ids.size() == kids.size());
    // scores align with ground truth and are non-increasing
    for (std::size_t i = 0; i < ranked.ordering.size(); ++i) {
        const SearchState& s = kids[static_cast<std::size_t>(ranked.ordering[i])];
        bool reach = reference.reachable(std::get<Game24Payload>(s.payload).numbers);
        CHECK(ranked.scores[i] == doctest::Approx(reach ? 1.0 : 0.1));
        if (i) CHECK(ranked.scores[i] <= ranked.scores[i - 1]);
    }
}

TEST_CASE("adversarial advisor prunes everything and proposes only dead ends") {
    PlanningProblem p = g24({4, 5, 6, 10});
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "adversarial"});
    auto session = session_for(advisor, p, ledger);
    game24::ReachOracle reference;

    auto kids = children_of(p, p.initial_state);
    ValidityVerdict verdict = session->check_validity(kids);
    for (const auto& e : verdict.per_state) CHECK_FALSE(e.keep);

    ProposedDecomposition prop = session->propose_decomposition(p.initial_state, 0);
    for (const SearchState& s : prop.proposed)
        CHECK_FALSE(reference.reachable(std::get<Game24Payload>(s.payload).numbers));
}

TEST_CASE("proposals are members of the complete decomposition") {
    PlanningProblem p = g24({1, 2, 4, 7});
    for (const char* kind : {"perfect_oracle", "adversarial"}) {
        StepLedger ledger;
        auto advisor = make_advisor(AdvisorSpec{.kind = kind});
        auto session = session_for(advisor, p, ledger);
        auto kids = children_of(p, p.initial_state);
        std::set<std::string> keys;
        for (const auto& k : kids) keys.insert(k.key);
        ProposedDecomposition prop = session->propose_decomposition(p.initial_state, 0);
        for (const SearchState& s : prop.proposed) CHECK(keys.count(s.key));
    }
}

TEST_CASE("seeded stochastic advisors are byte-identical across sessions") {
    PlanningProblem p = g24({4, 5, 6, 10});
    AdvisorSpec spec;
    spec.kind = "stochastic";
    spec.seed = 42;
    spec.error_rate = 0.5;
    auto advisor = make_advisor(spec);

    auto run_once = [&]() {
        StepLedger ledger;
        auto session = session_for(advisor, p, ledger);
        std::string log;
        auto kids = children_of(p, p.initial_state);
        for (const auto& e : session->check_validity(kids).per_state)
            log += e.keep ? 'k' : 'p';
        for (double s : session->rank_states(kids, 3).scores) log += std::to_string(s);
        auto cand = session->direct_solve(p.initial_state);
        log += cand.parsed ? *cand.parsed : "(none)";
        for (const SearchState& s : session->propose_decomposition(p.initial_state, 0).proposed)
            log += s.key;
        return log;
    };
    CHECK(run_once() == run_once());

    // a different seed gives a different stream somewhere
    AdvisorSpec other = spec;
    other.seed = 43;
    auto advisor2 = make_advisor(other);
    StepLedger ledger;
    auto session = session_for(advisor2, p, ledger);
    // not asserting inequality (could coincide); just exercising the path
    session->check_validity(children_of(p, p.initial_state));
}

TEST_CASE("stochastic advisor with error_rate 0 behaves like the perfect oracle") {
    PlanningProblem p = g24({4, 5, 6, 10});
    AdvisorSpec spec;
    spec.kind = "stochastic";
    spec.seed = 9;
    spec.error_rate = 0.0;
    auto stoch = make_advisor(spec);
    auto perfect = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    StepLedger l1, l2;
    auto s1 = session_for(stoch, p, l1);
    auto s2 = session_for(perfect, p, l2);
    auto kids = children_of(p, p.initial_state);
    auto v1 = s1->check_validity(kids);
    auto v2 = s2->check_validity(kids);
    for (std::size_t i = 0; i < kids.size(); ++i)
        CHECK(v1.per_state[i].keep == v2.per_state[i].keep);
}

TEST_CASE("unknown advisor kinds are rejected") {
    AdvisorSpec spec;
    spec.kind = "telepathic";
    CHECK_THROWS_AS(make_advisor(spec), std::invalid_argument);
}

TEST_CASE("oracle advisors work on blocksworld and crosswords too") {
    PlanningProblem p = blocks::make_problem("bw", {"a", "b"},
                                             {"on_table(a)", "on_table(b)"}, {"on(a,b)"}, 2);
    StepLedger ledger;
    auto advisor = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    auto session = session_for(advisor, p, ledger);
    CandidateSolution cand = session->direct_solve(p.initial_state);
    REQUIRE(cand.parsed.has_value());
    auto sol = domain_for(p.kind).verify_candidate(p, p.initial_state, *cand.parsed);
    CHECK(sol.has_value());
}
