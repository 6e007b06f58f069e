#include "support.hpp"

#include <doctest.h>

#include <thread>

using namespace seal;
using namespace seal::test;

TEST_CASE("charging increments the named counter and the total") {
    StepLedger ledger;
    ledger.charge(StepKind::llm_answerer, 1);
    CHECK(ledger.stats().llm_answerer_calls == 1);
    CHECK(ledger.stats().total_ss() == 1);
    ledger.charge(StepKind::ext_verifier, 3);
    CHECK(ledger.stats().ext_verifier_calls == 3);
    CHECK(ledger.stats().total_ss() == 4);
    CHECK_THROWS_AS(ledger.charge(StepKind::llm_ranking, 0), std::invalid_argument);
}

TEST_CASE("total is always the sum of the six counters") {
    SearchStats s;
    s.llm_answerer_calls = 334;
    s.llm_validity_calls = 0;
    s.llm_ranking_calls = 0;
    s.ext_decomposition_calls = 40;
    s.ext_verifier_calls = 31;
    s.ext_traversed_states = 0;
    CHECK(s.total_ss() == s.llm_total() + s.ext_total());
    CHECK(s.total_ss() == 405);
}

TEST_CASE("charging past the budget raises before mutating") {
    SearchBudget budget;
    budget.max_ss = 2;
    StepLedger ledger(budget);
    ledger.charge(StepKind::ext_traversed, 2);
    CHECK(ledger.stats().total_ss() == 2);
    CHECK_THROWS_AS(ledger.charge(StepKind::ext_traversed, 1), BudgetExceeded);
    CHECK(ledger.stats().total_ss() == 2); // unchanged after the throw
}

TEST_CASE("deadline expiry raises on the next charge") {
    SearchBudget budget;
    budget.deadline = std::chrono::milliseconds(5);
    StepLedger ledger(budget);
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    CHECK_THROWS_AS(ledger.charge(StepKind::ext_traversed, 1), DeadlineExceeded);
}

TEST_CASE("path replay detects tampered states") {
    PlanningProblem p = g24({1, 2, 4, 7});
    const Domain& dom = domain_for(DomainKind::game24);
    auto children = dom.decompose(p, p.initial_state);
    REQUIRE_FALSE(children.empty());
    SearchState good = children.front().state;
    CHECK(replay_matches(p, good));
    SearchState bad = good;
    bad.payload = game24::make_payload({Rational(9), Rational(9)});
    CHECK_FALSE(replay_matches(p, bad));
}

TEST_CASE("solved records re-verify their solution") {
    PlanningProblem p = g24({4, 4, 6, 8});
    auto advisor = make_advisor(AdvisorSpec{.kind = "perfect_oracle"});
    RunRecord rec = run(p, *advisor, algo(AlgorithmId::seal));
    REQUIRE(rec.solved);
    REQUIRE(rec.solution.has_value());
    CHECK(domain_for(p.kind).verify(p, *rec.solution));
    CHECK(rec.stats.total_ss() == rec.stats.llm_total() + rec.stats.ext_total());
}
