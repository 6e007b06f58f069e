#pragma once

#include "seal/core.hpp"
#include "seal/domain.hpp"

#include <memory>
#include <vector>

namespace seal {

struct CandidateSolution {
    std::string raw_text;
    std::optional<std::string> parsed; // canonical answer text, absent if unparseable
    std::string advisor_id;
};

struct ValidityVerdict {
    struct Entry {
        int index = 0;
        bool keep = true;
    };
    std::vector<Entry> per_state;                // one entry per queried state, in order
    std::vector<std::vector<bool>> vote_trace;   // the k binary samples per state
};

struct RankedStates {
    std::vector<int> ordering;  // permutation of input indices, best first
    std::vector<double> scores; // aligned with `ordering`, non-increasing
};

struct ProposedDecomposition {
    enum class Source { advisor, fallback };
    std::vector<SearchState> proposed;
    Source source = Source::fallback;
};

/// One run's view of an advisor. Sessions are single-threaded, own any
/// sampling state, and charge every issued call against the run's ledger.
class AdvisorSession {
public:
    virtual ~AdvisorSession() = default;

    virtual CandidateSolution direct_solve(const SearchState& state) = 0;
    virtual ValidityVerdict check_validity(const std::vector<SearchState>& states) = 0;
    virtual RankedStates rank_states(const std::vector<SearchState>& states, int samples) = 0;

    /// Priority subset of the state's decomposition. `max_candidates` > 0
    /// caps the proposal (beam-style next-step generation); 0 leaves the
    /// advisor free to propose everything it believes in.
    virtual ProposedDecomposition propose_decomposition(const SearchState& state,
                                                        int max_candidates) = 0;

    /// The ranking capability applied to candidate solutions (Best-of-N
    /// selection). Returns one score per candidate.
    virtual std::vector<double> rank_candidates(const std::vector<CandidateSolution>& candidates,
                                                int samples) = 0;
};

/// Immutable advisor handle; safe to share across concurrent runs. Seeded
/// families derive a per-run stream from (seed, problem_id).
class Advisor {
public:
    virtual ~Advisor() = default;
    virtual std::string id() const = 0;
    virtual std::unique_ptr<AdvisorSession> start(const PlanningProblem& problem,
                                                  StepLedger& ledger) const = 0;
};

struct AdvisorSpec {
    std::string kind = "null"; // llm | perfect_oracle | null | adversarial | stochastic
    // llm transport
    std::string model;
    std::string endpoint;
    double temperature = 0.7;
    std::string api_key_env = "OPENAI_API_KEY";
    int max_in_flight = 4;
    int max_tokens = 0; // 0 = provider default
    std::string cassette_path;
    std::string cassette_mode = "off"; // off | record | replay
    int validity_votes = 5;            // k binary samples per validity batch
    // stochastic
    std::uint64_t seed = 0;
    double error_rate = 0.0;
};

/// Builds an advisor handle; throws std::invalid_argument on unknown kinds.
std::shared_ptr<Advisor> make_advisor(const AdvisorSpec& spec);

/// Applies a ranking's ordering to any vector.
template <typename T>
std::vector<T> reorder(const std::vector<T>& items, const std::vector<int>& ordering) {
    std::vector<T> out;
    out.reserve(ordering.size());
    for (int i : ordering) out.push_back(items[static_cast<std::size_t>(i)]);
    return out;
}

} // namespace seal
