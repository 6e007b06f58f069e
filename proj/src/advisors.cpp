#include "seal/advisor.hpp"

#include "seal/domains/blocksworld.hpp"
#include "seal/domains/crosswords.hpp"
#include "seal/domains/game24.hpp"
#include "seal/llm/llm_advisor.hpp"
#include "seal/llm/parsers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <unordered_map>

namespace seal {
namespace {

std::uint64_t fnv1a(const std::string& text, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Ground-truth solver shared by the deterministic advisor family. All
/// queries here model the advisor's internal knowledge and are not charged.
class GroundTruth {
public:
    explicit GroundTruth(const PlanningProblem& problem)
        : problem_(problem), dom_(domain_for(problem.kind)) {
        if (problem.kind == DomainKind::crosswords)
            cw_ = std::make_unique<crosswords::CompletionOracle>(problem_);
    }

    bool reachable(const SearchState& state) {
        switch (problem_.kind) {
        case DomainKind::game24:
            return g24_.reachable(std::get<Game24Payload>(state.payload).numbers);
        case DomainKind::crosswords:
            return cw_->completable(std::get<CrosswordsPayload>(state.payload));
        case DomainKind::blocksworld: {
            int d = blocks_distance(std::get<BlocksPayload>(state.payload));
            return d >= 0 && state.depth() + d <= dom_.max_depth(problem_);
        }
        }
        return false;
    }

    /// Canonical raw reply a flawless model would produce from `state`.
    std::optional<std::string> answer_text(const SearchState& state) {
        if (!reachable(state)) return std::nullopt;
        switch (problem_.kind) {
        case DomainKind::game24: {
            auto expr = g24_.expression(std::get<Game24Payload>(state.payload).numbers);
            if (!expr) return std::nullopt;
            return "Answer: " + *expr + " = 24";
        }
        case DomainKind::crosswords: {
            auto full = cw_->complete(std::get<CrosswordsPayload>(state.payload));
            if (!full) return std::nullopt;
            return "Output:\n" + crosswords::grid_of(problem_, *full).row_text();
        }
        case DomainKind::blocksworld: {
            auto plan = blocks::bfs_plan(std::get<BlocksPayload>(state.payload),
                                         problem_.blocks().goal);
            if (!plan || plan->empty()) return std::nullopt;
            std::ostringstream os;
            os << "Plan:";
            for (const BlocksMove& m : *plan)
                os << '\n' << m.verb << ' ' << m.a << (m.b.empty() ? "" : " " + m.b);
            return os.str();
        }
        }
        return std::nullopt;
    }

private:
    int blocks_distance(const BlocksPayload& payload) {
        std::string key = blocks::key_of(payload);
        if (auto it = blocks_dist_.find(key); it != blocks_dist_.end()) return it->second;
        int d = blocks::bfs_min_steps(payload, problem_.blocks().goal);
        blocks_dist_[key] = d;
        return d;
    }

    const PlanningProblem& problem_;
    const Domain& dom_;
    game24::ReachOracle g24_;
    std::unique_ptr<crosswords::CompletionOracle> cw_;
    std::unordered_map<std::string, int> blocks_dist_;
};

enum class OracleKind { perfect, null_advisor, adversarial, stochastic };

class OracleSession final : public AdvisorSession {
public:
    OracleSession(const PlanningProblem& problem, StepLedger& ledger, OracleKind kind,
                  std::uint64_t seed, double error_rate, std::string advisor_id)
        : problem_(problem),
          dom_(domain_for(problem.kind)),
          ledger_(ledger),
          kind_(kind),
          error_rate_(error_rate),
          rng_(fnv1a(problem.problem_id, seed * 1099511628211ULL + 1469598103934665603ULL)),
          truth_(problem),
          id_(std::move(advisor_id)) {}

    CandidateSolution direct_solve(const SearchState& state) override {
        ledger_.charge(StepKind::llm_answerer, 1);
        CandidateSolution out;
        out.advisor_id = id_;
        switch (kind_) {
        case OracleKind::null_advisor: out.raw_text = ""; break;
        case OracleKind::perfect: out.raw_text = good_answer(state); break;
        case OracleKind::adversarial: out.raw_text = bad_answer(state); break;
        case OracleKind::stochastic:
            out.raw_text = flip() ? bad_answer(state) : good_answer(state);
            break;
        }
        out.parsed = llm::parse_answer(problem_.kind, out.raw_text);
        return out;
    }

    ValidityVerdict check_validity(const std::vector<SearchState>& states) override {
        ledger_.charge(StepKind::llm_validity, 1);
        ValidityVerdict v;
        for (std::size_t i = 0; i < states.size(); ++i) {
            bool truth = truth_.reachable(states[i]);
            bool keep = true;
            switch (kind_) {
            case OracleKind::null_advisor: keep = true; break;
            case OracleKind::perfect: keep = truth; break;
            case OracleKind::adversarial: keep = false; break;
            case OracleKind::stochastic: keep = flip() ? !truth : truth; break;
            }
            v.per_state.push_back({static_cast<int>(i), keep});
            v.vote_trace.push_back({keep});
        }
        return v;
    }

    RankedStates rank_states(const std::vector<SearchState>& states, int samples) override {
        ledger_.charge(StepKind::llm_ranking, 1);
        std::vector<double> scores;
        scores.reserve(states.size());
        for (const SearchState& s : states) scores.push_back(score(truth_.reachable(s), samples));
        return ranked(scores);
    }

    ProposedDecomposition propose_decomposition(const SearchState& state,
                                                int max_candidates) override {
        ledger_.charge(StepKind::llm_answerer, 1);
        ProposedDecomposition out;
        if (kind_ != OracleKind::null_advisor) {
            for (Successor& succ : dom_.decompose(problem_, state)) {
                if (max_candidates > 0 &&
                    static_cast<int>(out.proposed.size()) >= max_candidates)
                    break;
                bool truth = truth_.reachable(succ.state);
                bool propose = false;
                switch (kind_) {
                case OracleKind::perfect: propose = truth; break;
                case OracleKind::adversarial: propose = !truth; break;
                case OracleKind::stochastic: propose = flip() ? !truth : truth; break;
                case OracleKind::null_advisor: break;
                }
                if (propose) out.proposed.push_back(std::move(succ.state));
            }
        }
        out.source = out.proposed.empty() ? ProposedDecomposition::Source::fallback
                                          : ProposedDecomposition::Source::advisor;
        return out;
    }

    std::vector<double> rank_candidates(const std::vector<CandidateSolution>& candidates,
                                        int samples) override {
        ledger_.charge(StepKind::llm_ranking, 1);
        std::vector<double> scores;
        for (const CandidateSolution& c : candidates) {
            bool good = c.parsed &&
                        dom_.verify_candidate(problem_, problem_.initial_state, *c.parsed)
                            .has_value();
            scores.push_back(score(good, samples));
        }
        return scores;
    }

private:
    bool flip() {
        if (kind_ != OracleKind::stochastic) return false;
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < error_rate_;
    }

    double score(bool truth, int samples) {
        auto one = [&]() {
            bool t = flip() ? !truth : truth;
            return t ? 1.0 : 0.1;
        };
        if (kind_ == OracleKind::null_advisor) return 0.5;
        if (kind_ == OracleKind::adversarial) return truth ? 0.1 : 1.0;
        if (kind_ == OracleKind::perfect) return truth ? 1.0 : 0.1;
        double sum = 0.0;
        int m = std::max(1, samples);
        for (int i = 0; i < m; ++i) sum += one();
        return sum / m;
    }

    static RankedStates ranked(const std::vector<double>& scores) {
        RankedStates r;
        r.ordering.resize(scores.size());
        for (std::size_t i = 0; i < scores.size(); ++i) r.ordering[i] = static_cast<int>(i);
        std::stable_sort(r.ordering.begin(), r.ordering.end(), [&scores](int a, int b) {
            return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
        });
        for (int i : r.ordering) r.scores.push_back(scores[static_cast<std::size_t>(i)]);
        return r;
    }

    std::string good_answer(const SearchState& state) {
        auto text = truth_.answer_text(state);
        return text ? *text : "No solution found.";
    }

    std::string bad_answer(const SearchState& state) {
        if (problem_.kind != DomainKind::game24) return "No solution found.";
        const auto& nums = std::get<Game24Payload>(state.payload).numbers;
        if (nums.size() == 1) {
            if (nums[0] != Rational(24)) return "Answer: " + nums[0].str() + " = 24";
            return "Answer: 0 = 24";
        }
        for (char op : {'+', '-', '*'}) {
            Rational acc = nums[0];
            std::string text = nums[0].str();
            for (std::size_t i = 1; i < nums.size(); ++i) {
                switch (op) {
                case '+': acc = acc + nums[i]; break;
                case '-': acc = acc - nums[i]; break;
                case '*': acc = acc * nums[i]; break;
                }
                text += std::string(" ") + op + " " + nums[i].str();
            }
            if (acc != Rational(24)) return "Answer: " + text + " = 24";
        }
        return "Answer: 0 = 24";
    }

    const PlanningProblem& problem_;
    const Domain& dom_;
    StepLedger& ledger_;
    OracleKind kind_;
    double error_rate_;
    std::mt19937_64 rng_;
    GroundTruth truth_;
    std::string id_;
};

class OracleAdvisor final : public Advisor {
public:
    OracleAdvisor(OracleKind kind, std::uint64_t seed, double error_rate)
        : kind_(kind), seed_(seed), error_rate_(error_rate) {}

    std::string id() const override {
        switch (kind_) {
        case OracleKind::perfect: return "perfect_oracle";
        case OracleKind::null_advisor: return "null";
        case OracleKind::adversarial: return "adversarial";
        case OracleKind::stochastic: {
            std::ostringstream os;
            os << "stochastic-s" << seed_ << "-e" << error_rate_;
            return os.str();
        }
        }
        return "oracle";
    }

    std::unique_ptr<AdvisorSession> start(const PlanningProblem& problem,
                                          StepLedger& ledger) const override {
        return std::make_unique<OracleSession>(problem, ledger, kind_, seed_, error_rate_, id());
    }

private:
    OracleKind kind_;
    std::uint64_t seed_;
    double error_rate_;
};

} // namespace

std::shared_ptr<Advisor> make_advisor(const AdvisorSpec& spec) {
    if (spec.kind == "null")
        return std::make_shared<OracleAdvisor>(OracleKind::null_advisor, 0, 0.0);
    if (spec.kind == "perfect_oracle")
        return std::make_shared<OracleAdvisor>(OracleKind::perfect, 0, 0.0);
    if (spec.kind == "adversarial")
        return std::make_shared<OracleAdvisor>(OracleKind::adversarial, 0, 0.0);
    if (spec.kind == "stochastic")
        return std::make_shared<OracleAdvisor>(OracleKind::stochastic, spec.seed,
                                               spec.error_rate);
    if (spec.kind == "llm") return llm::make_llm_advisor(spec);
    throw std::invalid_argument("unknown advisor kind: " + spec.kind);
}

} // namespace seal
