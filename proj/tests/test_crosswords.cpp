#include "support.hpp"

#include <doctest.h>

using namespace seal;
using namespace seal::test;

namespace {

const Domain& dom = domain_for(DomainKind::crosswords);

// Small hand-built puzzle: rows of the truth grid spell the h-words, columns
// the v-words. Decoys are crafted per test.
CrosswordsGrid truth_grid() {
    CrosswordsGrid g;
    const char* rows[5] = {"RILLE", "OLEIN", "TEMPT", "ABASE", "LONER"};
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            g.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                rows[r][c];
    return g;
}

PlanningProblem make_puzzle(int decoys_per_clue = 5) {
    CrosswordsGrid truth = truth_grid();
    CrosswordsProblemData data;
    data.ground_truth = truth;
    for (int clue = 0; clue < 10; ++clue) {
        std::string word;
        for (int k = 0; k < 5; ++k) {
            int r = clue < 5 ? clue : k;
            int c = clue < 5 ? k : clue - 5;
            word += truth.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
        data.clues[clue] = "clue " + crosswords::clue_name(clue);
        data.candidates[clue].push_back(word);
        for (int d = 0; d < decoys_per_clue; ++d) {
            std::string decoy;
            for (int k = 0; k < 5; ++k)
                decoy += static_cast<char>('A' + (clue * 7 + d * 3 + k) % 26);
            data.candidates[clue].push_back(decoy);
        }
    }
    return crosswords::make_problem("cw-test", std::move(data));
}

} // namespace

TEST_CASE("empty grid offers every candidate of the first clue") {
    PlanningProblem p = make_puzzle(10); // 11 candidates for each clue
    auto children = dom.decompose(p, p.initial_state);
    CHECK(children.size() == 11);
    for (const auto& c : children)
        CHECK(std::get<CrosswordsMove>(c.action.move).clue == 0);
}

TEST_CASE("crossing letters filter later candidates") {
    PlanningProblem p = make_puzzle();
    // assign h1..h5 with the truth words, then v1 candidates must start 'R'
    SearchState s = p.initial_state;
    const char* rows[5] = {"RILLE", "OLEIN", "TEMPT", "ABASE", "LONER"};
    for (int r = 0; r < 5; ++r) {
        auto action = dom.parse_action(crosswords::clue_name(r) + " = " + rows[r]);
        REQUIRE(action.has_value());
        s = dom.apply(p, s, *action);
    }
    auto children = dom.decompose(p, s);
    for (const auto& c : children) {
        const auto& move = std::get<CrosswordsMove>(c.action.move);
        CHECK(move.clue == 5);
        CHECK(move.word[0] == 'R'); // must cross h1 = RILLE at (0,0)
    }
    // an independent constraint filter agrees on the child count
    int expected = 0;
    for (const std::string& w : p.crosswords().candidates[5]) {
        bool ok = true;
        for (int r = 0; r < 5; ++r) ok &= w[static_cast<std::size_t>(r)] == rows[r][0];
        expected += ok;
    }
    CHECK(static_cast<int>(children.size()) == expected);
}

TEST_CASE("dead end when no candidate is consistent") {
    PlanningProblem p = make_puzzle(0); // only the truth words
    SearchState s = p.initial_state;
    // assign a decoy-free truth h1, then break v1 by corrupting candidates
    auto& cands = std::get<CrosswordsProblemData>(p.data).candidates;
    cands[5].clear();
    cands[5].push_back("XXXXX");
    for (int i = 0; i < 5; ++i) cands[5].push_back(std::string("YYYY") + char('A' + i));
    auto h1 = dom.parse_action("h1 = RILLE");
    s = dom.apply(p, s, *h1);
    for (int r = 1; r < 5; ++r) {
        auto children = dom.decompose(p, s);
        REQUIRE_FALSE(children.empty());
        s = children.front().state;
    }
    CHECK(dom.decompose(p, s).empty()); // v1 has no consistent word
}

TEST_CASE("scoring matches hand-computed values") {
    CrosswordsGrid truth = truth_grid();
    auto score = crosswords::score_grid(truth, truth);
    CHECK(score.letter_pr == doctest::Approx(1.0));
    CHECK(score.word_pr == doctest::Approx(1.0));
    CHECK(score.game_pr == 1);

    CrosswordsGrid off = truth;
    // corrupt the entire last row: 5 letters, row h5 and all five columns miss
    for (int c = 0; c < 5; ++c) off.cell[4][static_cast<std::size_t>(c)] = 'Z';
    score = crosswords::score_grid(off, truth);
    CHECK(score.letter_pr == doctest::Approx(20.0 / 25.0));
    CHECK(score.word_pr == doctest::Approx(4.0 / 10.0));
    CHECK(score.game_pr == 0);
}

TEST_CASE("fully assigned states pass independent intersection re-verification") {
    PlanningProblem p = make_puzzle();
    // walk to a full assignment, always picking a child the completion
    // oracle accepts
    crosswords::CompletionOracle oracle(p);
    SearchState s = p.initial_state;
    while (std::get<CrosswordsPayload>(s.payload).assigned_count() < 10) {
        auto children = dom.decompose(p, s);
        bool advanced = false;
        for (auto& c : children) {
            if (oracle.completable(std::get<CrosswordsPayload>(c.state.payload))) {
                s = c.state;
                advanced = true;
                break;
            }
        }
        REQUIRE(advanced);
    }
    CHECK(dom.is_goal(p, s));
    Solution sol = dom.solution_from_path(p, s);
    CHECK(dom.verify(p, sol));
    // every letter pinned twice agrees
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            const auto& payload = std::get<CrosswordsPayload>(s.payload);
            std::string h = crosswords::assigned_word(p, payload, r);
            std::string v = crosswords::assigned_word(p, payload, 5 + c);
            CHECK(h[static_cast<std::size_t>(c)] == v[static_cast<std::size_t>(r)]);
        }
}

TEST_CASE("actions round-trip and reject malformed labels") {
    auto action = dom.parse_action("h2 = OLEIN");
    REQUIRE(action.has_value());
    CHECK(dom.format_action(*action) == "h2 = OLEIN");
    CHECK(std::get<CrosswordsMove>(action->move).clue == 1);
    CHECK(dom.parse_action("v5 = enter").has_value()); // case-normalized
    CHECK_FALSE(dom.parse_action("h6 = AAAAA").has_value());
    CHECK_FALSE(dom.parse_action("h1 = TOOLONGWORD").has_value());
    CHECK_FALSE(dom.parse_action("h1 OLEIN").has_value());
}

TEST_CASE("verify requires every row and column word to be a candidate") {
    PlanningProblem p = make_puzzle();
    Solution sol;
    sol.kind = DomainKind::crosswords;
    sol.body = truth_grid();
    sol.text = truth_grid().row_text();
    CHECK(dom.verify(p, sol));
    CrosswordsGrid bad = truth_grid();
    bad.cell[0][0] = 'X';
    Solution bad_sol = sol;
    bad_sol.body = bad;
    CHECK_FALSE(dom.verify(p, bad_sol));
}
