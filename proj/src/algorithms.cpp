#include "seal/algorithms.hpp"

#include "seal/domains/crosswords.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace seal {
namespace {

struct Ctx {
    const PlanningProblem& problem;
    const Domain& dom;
    StepLedger& ledger;
    const AlgorithmConfig& cfg;
    AdvisorSession* advisor = nullptr;
    std::vector<std::string>* trace = nullptr;
    const std::function<void(const SealCExpansion&)>* observer = nullptr;
    int max_depth = 0;
};

void note_visit(Ctx& c, const SearchState& s) {
    if (c.trace) c.trace->push_back(s.key);
}

/// Charged goal test, run only where the domain says a goal can occur.
bool goal_check(Ctx& c, const SearchState& s, std::optional<Solution>& out) {
    if (!c.dom.goal_possible(c.problem, s)) return false;
    c.ledger.charge(StepKind::ext_verifier, 1);
    if (!c.dom.is_goal(c.problem, s)) return false;
    out = c.dom.solution_from_path(c.problem, s);
    return true;
}

std::string normalize_answer(const std::string& text) {
    std::string out;
    bool pending_space = false;
    for (char raw : text) {
        char ch = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
        if (std::isspace(static_cast<unsigned char>(ch))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += ch;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Traditional searches
// ---------------------------------------------------------------------------

void exhaustive_rec(Ctx& c, const SearchState& s, std::optional<Solution>& found) {
    c.ledger.charge(StepKind::ext_traversed, 1);
    note_visit(c, s);
    std::optional<Solution> here;
    if (goal_check(c, s, here)) {
        if (!found) found = std::move(here);
        return; // goal states have no useful expansions
    }
    if (s.depth() >= c.max_depth) return;
    c.ledger.charge(StepKind::ext_decomposition, 1);
    for (const Successor& succ : c.dom.decompose(c.problem, s))
        exhaustive_rec(c, succ.state, found);
}

std::optional<Solution> run_exhaustive(Ctx& c) {
    std::optional<Solution> found;
    exhaustive_rec(c, c.problem.initial_state, found);
    return found;
}

std::optional<Solution> run_dfs(Ctx& c, bool prune) {
    // Pruning skips states whose canonical key was already visited at the
    // same or shallower depth; the depth condition matters only for
    // Blocksworld, where the remaining plan budget depends on depth.
    std::unordered_map<std::string, int> seen;
    std::optional<Solution> sol;
    std::function<bool(const SearchState&)> rec = [&](const SearchState& s) -> bool {
        c.ledger.charge(StepKind::ext_traversed, 1);
        note_visit(c, s);
        if (prune) {
            auto [it, inserted] = seen.emplace(s.key, s.depth());
            if (!inserted && s.depth() < it->second) it->second = s.depth();
        }
        if (goal_check(c, s, sol)) return true;
        if (s.depth() >= c.max_depth) return false;
        c.ledger.charge(StepKind::ext_decomposition, 1);
        for (const Successor& succ : c.dom.decompose(c.problem, s)) {
            if (prune) {
                auto it = seen.find(succ.state.key);
                if (it != seen.end() && it->second <= succ.state.depth()) continue;
            }
            if (rec(succ.state)) return true;
        }
        return false;
    };
    rec(c.problem.initial_state);
    return sol;
}

std::optional<Solution> run_bfs(Ctx& c, bool prune) {
    std::optional<Solution> sol;
    std::deque<SearchState> queue;
    std::unordered_set<std::string> enqueued;
    queue.push_back(c.problem.initial_state);
    if (prune) enqueued.insert(c.problem.initial_state.key);
    while (!queue.empty()) {
        SearchState s = std::move(queue.front());
        queue.pop_front();
        c.ledger.charge(StepKind::ext_traversed, 1);
        note_visit(c, s);
        if (goal_check(c, s, sol)) return sol;
        if (s.depth() >= c.max_depth) continue;
        c.ledger.charge(StepKind::ext_decomposition, 1);
        for (Successor& succ : c.dom.decompose(c.problem, s)) {
            if (prune && !enqueued.insert(succ.state.key).second) continue;
            queue.push_back(std::move(succ.state));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// One-shot samplers
// ---------------------------------------------------------------------------

std::optional<Solution> run_cot(Ctx& c, std::optional<Solution>& attempt) {
    note_visit(c, c.problem.initial_state);
    CandidateSolution cand = c.advisor->direct_solve(c.problem.initial_state);
    if (!cand.parsed) return std::nullopt;
    attempt = c.dom.parse_solution(c.problem, *cand.parsed);
    c.ledger.charge(StepKind::ext_verifier, 1);
    return c.dom.verify_candidate(c.problem, c.problem.initial_state, *cand.parsed);
}

std::optional<Solution> run_majority_vote(Ctx& c, std::optional<Solution>& attempt) {
    note_visit(c, c.problem.initial_state);
    int n = c.cfg.n_samples > 0 ? c.cfg.n_samples : 10;
    struct Group {
        int count = 0;
        int first = 0;
        std::string text;
    };
    std::map<std::string, Group> groups;
    for (int i = 0; i < n; ++i) {
        CandidateSolution cand = c.advisor->direct_solve(c.problem.initial_state);
        if (!cand.parsed) continue;
        std::string key = normalize_answer(*cand.parsed);
        auto [it, inserted] = groups.emplace(key, Group{0, i, *cand.parsed});
        ++it->second.count;
    }
    if (groups.empty()) return std::nullopt;
    const Group* winner = nullptr;
    for (const auto& [key, g] : groups) {
        if (!winner || g.count > winner->count ||
            (g.count == winner->count && g.first < winner->first))
            winner = &g;
    }
    attempt = c.dom.parse_solution(c.problem, winner->text);
    c.ledger.charge(StepKind::ext_verifier, 1);
    return c.dom.verify_candidate(c.problem, c.problem.initial_state, winner->text);
}

std::optional<Solution> run_best_of_n(Ctx& c, std::optional<Solution>& attempt) {
    note_visit(c, c.problem.initial_state);
    int n = c.cfg.n_samples > 0 ? c.cfg.n_samples : 20;
    std::vector<CandidateSolution> parsed;
    for (int i = 0; i < n; ++i) {
        CandidateSolution cand = c.advisor->direct_solve(c.problem.initial_state);
        if (cand.parsed) parsed.push_back(std::move(cand));
    }
    if (parsed.empty()) return std::nullopt;
    std::vector<double> scores = c.advisor->rank_candidates(parsed, c.cfg.eval_samples);
    std::size_t best = 0;
    for (std::size_t i = 1; i < parsed.size(); ++i)
        if (scores[i] > scores[best]) best = i; // ties keep the earliest sample
    attempt = c.dom.parse_solution(c.problem, *parsed[best].parsed);
    c.ledger.charge(StepKind::ext_verifier, 1);
    return c.dom.verify_candidate(c.problem, c.problem.initial_state, *parsed[best].parsed);
}

// ---------------------------------------------------------------------------
// Beam search
// ---------------------------------------------------------------------------

bool beam_complete(Ctx& c, const SearchState& s) {
    if (s.depth() >= c.max_depth) return true;
    // Blocksworld goals can appear before the depth bound; this is beam's own
    // uncharged bookkeeping, not a rule-verifier call.
    return c.dom.goal_possible(c.problem, s) && c.dom.is_goal(c.problem, s);
}

std::optional<Solution> run_beam(Ctx& c, bool rule_verify_final,
                                 std::optional<Solution>& attempt) {
    int width = std::max(1, c.cfg.beam_width);
    struct Finalist {
        SearchState state;
        double score;
    };
    std::vector<Finalist> finalists;
    std::vector<SearchState> beam{c.problem.initial_state};
    note_visit(c, c.problem.initial_state);

    for (int level = 0; level < c.max_depth && !beam.empty(); ++level) {
        std::vector<SearchState> candidates;
        std::unordered_set<std::string> keys;
        for (const SearchState& s : beam) {
            ProposedDecomposition prop = c.advisor->propose_decomposition(s, width);
            for (SearchState& p : prop.proposed)
                if (keys.insert(p.key).second) candidates.push_back(std::move(p));
        }
        if (candidates.empty()) break;
        RankedStates ranked = c.advisor->rank_states(candidates, c.cfg.eval_samples);
        std::vector<SearchState> next;
        for (std::size_t r = 0; r < ranked.ordering.size(); ++r) {
            SearchState& s = candidates[static_cast<std::size_t>(ranked.ordering[r])];
            if (beam_complete(c, s)) {
                finalists.push_back({std::move(s), ranked.scores[r]});
            } else if (static_cast<int>(next.size()) < width) {
                note_visit(c, s);
                next.push_back(std::move(s));
            }
        }
        beam = std::move(next);
    }

    if (finalists.empty()) return std::nullopt;
    std::stable_sort(finalists.begin(), finalists.end(),
                     [](const Finalist& a, const Finalist& b) { return a.score > b.score; });

    if (rule_verify_final) {
        for (const Finalist& f : finalists) {
            c.ledger.charge(StepKind::ext_verifier, 1);
            Solution sol = c.dom.solution_from_path(c.problem, f.state);
            if (c.dom.verify(c.problem, sol)) return sol;
        }
        attempt = c.dom.solution_from_path(c.problem, finalists.front().state);
        return std::nullopt;
    }
    // Plain beam commits to the top-scored answer; whether it is right is a
    // matter for evaluation, not for the search itself.
    Solution sol = c.dom.solution_from_path(c.problem, finalists.front().state);
    attempt = sol;
    if (c.dom.verify(c.problem, sol)) return sol;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// SeaL and SeaL-C
// ---------------------------------------------------------------------------

std::optional<Solution> seal_rec(Ctx& c, const SearchState& s) {
    note_visit(c, s);
    std::optional<Solution> structural;
    if (goal_check(c, s, structural)) return structural;

    bool verifier_available = !c.cfg.has_flag("no_verifier");
    if (verifier_available && !c.cfg.has_flag("no_direct_solve")) {
        CandidateSolution cand = c.advisor->direct_solve(s);
        if (cand.parsed) {
            c.ledger.charge(StepKind::ext_verifier, 1);
            if (auto sol = c.dom.verify_candidate(c.problem, s, *cand.parsed)) return sol;
        }
    }

    if (s.depth() >= c.max_depth) return std::nullopt;
    c.ledger.charge(StepKind::ext_decomposition, 1);
    std::vector<Successor> children = c.dom.decompose(c.problem, s);
    if (children.empty()) return std::nullopt;

    std::vector<SearchState> states;
    states.reserve(children.size());
    for (Successor& succ : children) states.push_back(std::move(succ.state));

    if (!c.cfg.has_flag("no_validity")) {
        ValidityVerdict verdict = c.advisor->check_validity(states);
        std::vector<SearchState> kept;
        for (const auto& entry : verdict.per_state)
            if (entry.keep) kept.push_back(std::move(states[static_cast<std::size_t>(entry.index)]));
        states = std::move(kept);
        if (states.empty()) return std::nullopt;
    }

    if (!c.cfg.has_flag("no_ranking")) {
        RankedStates ranked = c.advisor->rank_states(states, 1);
        states = reorder(states, ranked.ordering);
    }

    for (const SearchState& child : states)
        if (auto sol = seal_rec(c, child)) return sol;
    return std::nullopt;
}

std::optional<Solution> seal_c_rec(Ctx& c, const SearchState& s) {
    note_visit(c, s);
    std::optional<Solution> structural;
    if (goal_check(c, s, structural)) return structural;

    if (!c.cfg.has_flag("no_direct_solve") && !c.cfg.has_flag("no_verifier")) {
        CandidateSolution cand = c.advisor->direct_solve(s);
        if (cand.parsed) {
            c.ledger.charge(StepKind::ext_verifier, 1);
            if (auto sol = c.dom.verify_candidate(c.problem, s, *cand.parsed)) return sol;
        }
    }

    if (s.depth() >= c.max_depth) return std::nullopt;
    c.ledger.charge(StepKind::ext_decomposition, 1);
    std::vector<Successor> children = c.dom.decompose(c.problem, s);
    if (children.empty()) return std::nullopt;

    ProposedDecomposition prop = c.advisor->propose_decomposition(s, 0);

    // Phase 1 holds the advisor's proposals (membership-filtered against the
    // complete decomposition, in proposal order); phase 2 the remainder. The
    // two phases cover D(s) exactly.
    std::unordered_map<std::string, std::size_t> by_key;
    for (std::size_t i = 0; i < children.size(); ++i) by_key.emplace(children[i].state.key, i);
    std::unordered_set<std::string> in_phase1;
    std::vector<SearchState> phase1, phase2;
    for (const SearchState& p : prop.proposed) {
        auto it = by_key.find(p.key);
        if (it == by_key.end()) continue; // not a member of D(s)
        if (!in_phase1.insert(p.key).second) continue;
        phase1.push_back(children[it->second].state);
    }
    for (const Successor& succ : children)
        if (!in_phase1.count(succ.state.key)) phase2.push_back(succ.state);

    if (c.observer && *c.observer) {
        SealCExpansion e;
        e.parent_key = s.key;
        for (const auto& st : phase1) e.phase1_keys.push_back(st.key);
        for (const auto& st : phase2) e.phase2_keys.push_back(st.key);
        for (const auto& succ : children) e.decomposition_keys.push_back(succ.state.key);
        (*c.observer)(e);
    }

    for (std::vector<SearchState>* phase : {&phase1, &phase2}) {
        if (phase->empty()) continue;
        if (!c.cfg.has_flag("no_ranking")) {
            RankedStates ranked = c.advisor->rank_states(*phase, 1);
            *phase = reorder(*phase, ranked.ordering);
        }
        for (const SearchState& child : *phase)
            if (auto sol = seal_c_rec(c, child)) return sol;
    }
    return std::nullopt;
}

} // namespace

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

std::string to_string(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::exhaustive: return "exhaustive";
    case AlgorithmId::dfs: return "dfs";
    case AlgorithmId::bfs: return "bfs";
    case AlgorithmId::dfs_prune: return "dfs_prune";
    case AlgorithmId::bfs_prune: return "bfs_prune";
    case AlgorithmId::cot: return "cot";
    case AlgorithmId::majority_vote: return "majority_vote";
    case AlgorithmId::best_of_n: return "best_of_n";
    case AlgorithmId::beam: return "beam";
    case AlgorithmId::beam_rv: return "beam_rv";
    case AlgorithmId::seal: return "seal";
    case AlgorithmId::seal_c: return "seal_c";
    }
    return "unknown";
}

std::optional<AlgorithmId> algorithm_from(const std::string& name) {
    static const std::map<std::string, AlgorithmId> table = {
        {"exhaustive", AlgorithmId::exhaustive},
        {"dfs", AlgorithmId::dfs},
        {"bfs", AlgorithmId::bfs},
        {"dfs_prune", AlgorithmId::dfs_prune},
        {"bfs_prune", AlgorithmId::bfs_prune},
        {"cot", AlgorithmId::cot},
        {"majority_vote", AlgorithmId::majority_vote},
        {"best_of_n", AlgorithmId::best_of_n},
        {"beam", AlgorithmId::beam},
        {"beam_rv", AlgorithmId::beam_rv},
        {"seal", AlgorithmId::seal},
        {"seal_c", AlgorithmId::seal_c},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

bool is_traditional(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::exhaustive:
    case AlgorithmId::dfs:
    case AlgorithmId::bfs:
    case AlgorithmId::dfs_prune:
    case AlgorithmId::bfs_prune: return true;
    default: return false;
    }
}

std::string AlgorithmConfig::id_string() const {
    std::string out = seal::to_string(id);
    if (id == AlgorithmId::seal || id == AlgorithmId::seal_c) {
        if (has_flag("no_validity")) out += "/V";
        if (has_flag("no_direct_solve")) out += "/D";
        if (has_flag("no_ranking")) out += "/R";
        if (has_flag("no_verifier")) out += "/NV";
    }
    return out;
}

std::optional<AlgorithmConfig> AlgorithmConfig::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == '/') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    AlgorithmConfig cfg;
    auto base = algorithm_from(parts[0]);
    if (!base) return std::nullopt;
    cfg.id = *base;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::string f = parts[i];
        for (char& ch : f) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (f == "V")
            cfg.ablation_flags.insert("no_validity");
        else if (f == "D")
            cfg.ablation_flags.insert("no_direct_solve");
        else if (f == "R")
            cfg.ablation_flags.insert("no_ranking");
        else if (f == "NV")
            cfg.ablation_flags.insert("no_verifier");
        else
            return std::nullopt;
    }
    if (!cfg.ablation_flags.empty() && cfg.id != AlgorithmId::seal &&
        cfg.id != AlgorithmId::seal_c)
        return std::nullopt; // flags only make sense for SeaL variants
    return cfg;
}

// ---------------------------------------------------------------------------
// Driver
// ---------------------------------------------------------------------------

RunRecord run_algorithm(const PlanningProblem& problem, const Advisor& advisor,
                        const RunOptions& options) {
    const Domain& dom = domain_for(problem.kind);
    RunRecord record;
    record.problem_id = problem.problem_id;
    record.algorithm_id = options.algorithm.id_string();
    record.config_hash = options.config_hash;
    record.budget_max_ss = options.budget.max_ss;

    StepLedger ledger(options.budget);
    std::vector<std::string> trace;
    Ctx ctx{problem,
            dom,
            ledger,
            options.algorithm,
            nullptr,
            options.record_trace ? &trace : nullptr,
            options.seal_c_observer ? &options.seal_c_observer : nullptr,
            dom.max_depth(problem)};

    bool traditional = is_traditional(options.algorithm.id);
    record.advisor_id = traditional ? "none" : advisor.id();

    std::unique_ptr<AdvisorSession> session;
    std::optional<Solution> solution;
    std::optional<Solution> attempt;
    auto started = std::chrono::steady_clock::now();
    try {
        if (!traditional) {
            session = advisor.start(problem, ledger);
            ctx.advisor = session.get();
        }
        switch (options.algorithm.id) {
        case AlgorithmId::exhaustive: solution = run_exhaustive(ctx); break;
        case AlgorithmId::dfs: solution = run_dfs(ctx, false); break;
        case AlgorithmId::dfs_prune: solution = run_dfs(ctx, true); break;
        case AlgorithmId::bfs: solution = run_bfs(ctx, false); break;
        case AlgorithmId::bfs_prune: solution = run_bfs(ctx, true); break;
        case AlgorithmId::cot: solution = run_cot(ctx, attempt); break;
        case AlgorithmId::majority_vote: solution = run_majority_vote(ctx, attempt); break;
        case AlgorithmId::best_of_n: solution = run_best_of_n(ctx, attempt); break;
        case AlgorithmId::beam: solution = run_beam(ctx, false, attempt); break;
        case AlgorithmId::beam_rv: solution = run_beam(ctx, true, attempt); break;
        case AlgorithmId::seal: solution = seal_rec(ctx, problem.initial_state); break;
        case AlgorithmId::seal_c: solution = seal_c_rec(ctx, problem.initial_state); break;
        }
    } catch (const BudgetExceeded&) {
        record.failure = "budget_exceeded";
    } catch (const DeadlineExceeded&) {
        record.failure = "deadline";
    } catch (const AdvisorUnavailable&) {
        record.failure = "advisor_unavailable";
    }
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    record.stats = ledger.stats();
    record.retries = ledger.retries();
    if (options.record_trace) record.visit_trace = std::move(trace);

    if (solution) {
        if (dom.verify(problem, *solution)) {
            record.solved = true;
            record.solution = std::move(solution);
        } else {
            record.failure = "solution_rejected";
        }
    }

    if (problem.kind == DomainKind::crosswords && problem.crosswords().ground_truth) {
        const Solution* graded =
            record.solution ? &*record.solution : (attempt ? &*attempt : nullptr);
        crosswords::Score score;
        if (graded)
            if (const auto* grid = std::get_if<CrosswordsGrid>(&graded->body))
                score = crosswords::score_grid(*grid, *problem.crosswords().ground_truth);
        record.metrics["letter_pr"] = score.letter_pr;
        record.metrics["word_pr"] = score.word_pr;
        record.metrics["game_pr"] = score.game_pr;
    }
    return record;
}

} // namespace seal
