#include "seal/llm/llm_advisor.hpp"

#include "seal/llm/chat_client.hpp"
#include "seal/llm/parsers.hpp"
#include "seal/llm/prompts.hpp"

#include <algorithm>
#include <sstream>

namespace seal::llm {
namespace {

// Task wrappers for the two domains whose check/solve prompts are not part of
// the fixed template set. They reuse the same reply grammar the parsers
// understand ("Answer: ...", "Plan:", "Conclusion: ...").
constexpr const char* kBlocksRules =
    "You are stacking blocks with a robot arm. Available actions: pickup <b> (b clear, on the "
    "table, arm empty), unstack <b> <c> (b on c, b clear, arm empty), put <b> (holding b), "
    "stack <b> <c> (holding b, c clear).";

std::string game24_step_example() { return "1 + 7 = 8; (left: 2 4 8)"; }

class LlmSession final : public AdvisorSession {
public:
    LlmSession(const PlanningProblem& problem, StepLedger& ledger, ChatClient& client,
               const AdvisorSpec& spec, std::string advisor_id)
        : problem_(problem),
          dom_(domain_for(problem.kind)),
          ledger_(ledger),
          client_(client),
          spec_(spec),
          id_(std::move(advisor_id)) {}

    CandidateSolution direct_solve(const SearchState& state) override {
        CandidateSolution out;
        out.advisor_id = id_;
        out.raw_text = sample(solve_prompt(state), 1, StepKind::llm_answerer).front();
        out.parsed = parse_answer(problem_.kind, out.raw_text);
        return out;
    }

    ValidityVerdict check_validity(const std::vector<SearchState>& states) override {
        int k = std::max(1, spec_.validity_votes);
        std::vector<std::string> replies = sample(validity_prompt(states), k, StepKind::llm_validity);
        ValidityVerdict verdict;
        verdict.vote_trace.assign(states.size(), {});
        for (const std::string& reply : replies) {
            auto parsed = parse_validity(reply);
            for (std::size_t i = 0; i < states.size(); ++i) {
                bool vote;
                if (!parsed) {
                    vote = true; // fail-open: never prune on unparseable output
                } else if (!parsed->yes) {
                    vote = false;
                } else {
                    // a bare "yes" endorses every state in the batch
                    vote = parsed->states.empty() ||
                           parsed->states.count(static_cast<int>(i)) > 0;
                }
                verdict.vote_trace[i].push_back(vote);
            }
        }
        for (std::size_t i = 0; i < states.size(); ++i) {
            int yes = 0;
            for (bool b : verdict.vote_trace[i]) yes += b;
            verdict.per_state.push_back(
                {static_cast<int>(i), yes * 2 > static_cast<int>(verdict.vote_trace[i].size())});
        }
        return verdict;
    }

    RankedStates rank_states(const std::vector<SearchState>& states, int samples) override {
        int m = std::max(1, samples);
        std::vector<double> scores;
        scores.reserve(states.size());
        for (const SearchState& s : states) {
            std::vector<std::string> replies = sample(value_prompt(s), m, StepKind::llm_ranking);
            double sum = 0.0;
            for (const std::string& reply : replies) {
                auto bucket = parse_value(reply);
                sum += bucket ? bucket_score(*bucket) : 0.5; // neutral on parse failure
            }
            scores.push_back(sum / m);
        }
        RankedStates out;
        out.ordering.resize(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) out.ordering[i] = static_cast<int>(i);
        std::stable_sort(out.ordering.begin(), out.ordering.end(), [&scores](int a, int b) {
            return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
        });
        for (int i : out.ordering) out.scores.push_back(scores[static_cast<std::size_t>(i)]);
        return out;
    }

    ProposedDecomposition propose_decomposition(const SearchState& state,
                                                int max_candidates) override {
        std::map<std::string, std::string> vars{
            {"format_example", format_example()},
            {"input", dom_.format_state(problem_, state)}};
        TemplateId id = TemplateId::p_d;
        if (max_candidates > 0) {
            id = TemplateId::beam_propose;
            vars["max_candidates"] = std::to_string(max_candidates);
        }
        std::string reply = sample(render_prompt(id, vars), 1, StepKind::llm_answerer).front();

        ProposedDecomposition out;
        std::vector<std::string> keys;
        std::istringstream is(reply);
        std::string line;
        while (std::getline(is, line)) {
            auto action = dom_.parse_action(line);
            if (!action) continue;
            SearchState next;
            try {
                next = dom_.apply(problem_, state, *action);
            } catch (const std::invalid_argument&) {
                continue; // proposed step is not legal here
            }
            if (std::find(keys.begin(), keys.end(), next.key) != keys.end()) continue;
            keys.push_back(next.key);
            out.proposed.push_back(std::move(next));
            if (max_candidates > 0 && static_cast<int>(out.proposed.size()) >= max_candidates)
                break;
        }
        out.source = out.proposed.empty() ? ProposedDecomposition::Source::fallback
                                          : ProposedDecomposition::Source::advisor;
        return out;
    }

    std::vector<double> rank_candidates(const std::vector<CandidateSolution>& candidates,
                                        int samples) override {
        int m = std::max(1, samples);
        std::vector<double> scores;
        for (const CandidateSolution& c : candidates) {
            if (!c.parsed) {
                scores.push_back(0.1);
                continue;
            }
            std::map<std::string, std::string> vars{{"input", *c.parsed}};
            std::vector<std::string> replies =
                sample(render_prompt(TemplateId::beam_eval, vars), m, StepKind::llm_ranking);
            double sum = 0.0;
            for (const std::string& reply : replies) {
                auto bucket = parse_value(reply);
                sum += bucket ? bucket_score(*bucket) : 0.5;
            }
            scores.push_back(sum / m);
        }
        return scores;
    }

private:
    /// Issues `n` samples of one prompt and charges one step per sample that
    /// came back. Transport retries are logged, not charged.
    std::vector<std::string> sample(const std::string& prompt, int n, StepKind kind) {
        ledger_.check_deadline();
        if (ledger_.budget().max_ss &&
            ledger_.stats().total_ss() + n > *ledger_.budget().max_ss)
            throw BudgetExceeded();
        ChatRequest request;
        request.model = spec_.model;
        request.temperature = spec_.temperature;
        request.n = n;
        request.max_tokens = spec_.max_tokens;
        request.messages.push_back({"user", prompt});
        ChatResponse response = client_.complete(request);
        ledger_.note_retries(response.retries);
        ledger_.charge(kind, n);
        return response.choices;
    }

    std::string solve_prompt(const SearchState& state) const {
        switch (problem_.kind) {
        case DomainKind::game24:
            return render_prompt(TemplateId::p_solve_game24,
                                 {{"input", dom_.format_state(problem_, state)}});
        case DomainKind::crosswords: {
            const auto& data = problem_.crosswords();
            std::ostringstream os;
            for (int c = 0; c < 10; ++c) {
                os << (c < 5 ? "h" : "v") << c % 5 + 1 << ". " << data.clues[c] << " (candidates:";
                for (const std::string& w : data.candidates[c]) os << ' ' << w;
                os << ")";
                if (c != 9) os << '\n';
            }
            return render_prompt(TemplateId::p_solve_crosswords, {{"input", os.str()}});
        }
        case DomainKind::blocksworld: {
            std::ostringstream os;
            os << kBlocksRules << "\nCurrent state: " << dom_.format_state(problem_, state)
               << "\nGoal: " << goal_text()
               << "\nFind the shortest action sequence reaching the goal. Reply with "
                  "\"Plan:\" followed by one action per line.";
            return os.str();
        }
        }
        return "";
    }

    std::string validity_prompt(const std::vector<SearchState>& states) const {
        std::ostringstream body;
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (i) body << '\n';
            body << "State " << i << ": " << dom_.format_state(problem_, states[i]);
        }
        if (problem_.kind == DomainKind::game24)
            return render_prompt(TemplateId::p_c_game24, {{"input", body.str()}});
        std::ostringstream os;
        os << task_rules() << "\nGoal: " << goal_text()
           << "\nFor each numbered state below, judge whether the goal is still reachable "
              "from it. Reply in the exact format \"Answer: yes; Reason: State i ...\" "
              "naming every state that can still reach the goal, or \"Answer: no;\" if "
              "none can.\nInput:\n"
           << body.str() << "\n\nState Precheck:";
        return os.str();
    }

    std::string value_prompt(const SearchState& state) const {
        if (problem_.kind == DomainKind::game24)
            return render_prompt(TemplateId::p_v_game24,
                                 {{"input", dom_.format_state(problem_, state)}});
        std::map<std::string, std::string> vars{
            {"input", task_rules() + "\nGoal: " + goal_text() + "\nState: " +
                          dom_.format_state(problem_, state)}};
        return render_prompt(TemplateId::beam_eval, vars);
    }

    std::string format_example() const {
        switch (problem_.kind) {
        case DomainKind::game24: return game24_step_example();
        case DomainKind::crosswords: return "h2 = OLEIN";
        case DomainKind::blocksworld: return "stack a b";
        }
        return "";
    }

    std::string task_rules() const {
        switch (problem_.kind) {
        case DomainKind::game24:
            return "Combine numbers with + - * / to reach 24, using each exactly once.";
        case DomainKind::crosswords:
            return "Fill a 5x5 crossword by assigning one candidate word per clue; crossing "
                   "letters must agree.";
        case DomainKind::blocksworld: return kBlocksRules;
        }
        return "";
    }

    std::string goal_text() const {
        switch (problem_.kind) {
        case DomainKind::game24: return "reach the single number 24";
        case DomainKind::crosswords: return "a fully consistent grid";
        case DomainKind::blocksworld: {
            std::ostringstream os;
            bool first = true;
            for (const std::string& g : problem_.blocks().goal) {
                if (!first) os << ", ";
                first = false;
                os << g;
            }
            return os.str();
        }
        }
        return "";
    }

    const PlanningProblem& problem_;
    const Domain& dom_;
    StepLedger& ledger_;
    ChatClient& client_;
    const AdvisorSpec& spec_;
    std::string id_;
};

class LlmAdvisor final : public Advisor {
public:
    explicit LlmAdvisor(AdvisorSpec spec)
        : spec_(std::move(spec)),
          client_(ChatClient::Options{spec_.endpoint, spec_.api_key_env, spec_.max_in_flight,
                                      3, spec_.cassette_path, spec_.cassette_mode, true, 10,
                                      300}) {}

    std::string id() const override {
        return spec_.model.empty() ? "llm" : "llm-" + spec_.model;
    }

    std::unique_ptr<AdvisorSession> start(const PlanningProblem& problem,
                                          StepLedger& ledger) const override {
        return std::make_unique<LlmSession>(problem, ledger, client_, spec_, id());
    }

private:
    AdvisorSpec spec_;
    mutable ChatClient client_;
};

} // namespace

std::shared_ptr<Advisor> make_llm_advisor(const AdvisorSpec& spec) {
    return std::make_shared<LlmAdvisor>(spec);
}

} // namespace seal::llm
