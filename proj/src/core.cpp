#include "seal/core.hpp"

#include <sstream>

namespace seal {

std::string to_string(DomainKind kind) {
    switch (kind) {
    case DomainKind::game24: return "game24";
    case DomainKind::crosswords: return "crosswords";
    case DomainKind::blocksworld: return "blocksworld";
    }
    return "unknown";
}

std::optional<DomainKind> domain_kind_from(const std::string& name) {
    if (name == "game24") return DomainKind::game24;
    if (name == "crosswords") return DomainKind::crosswords;
    if (name == "blocksworld") return DomainKind::blocksworld;
    return std::nullopt;
}

void StepLedger::charge(StepKind kind, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("charge requires n >= 1");
    check_deadline();
    if (budget_.max_ss && stats_.total_ss() + n > *budget_.max_ss) throw BudgetExceeded();
    switch (kind) {
    case StepKind::llm_answerer: stats_.llm_answerer_calls += n; break;
    case StepKind::llm_validity: stats_.llm_validity_calls += n; break;
    case StepKind::llm_ranking: stats_.llm_ranking_calls += n; break;
    case StepKind::ext_decomposition: stats_.ext_decomposition_calls += n; break;
    case StepKind::ext_verifier: stats_.ext_verifier_calls += n; break;
    case StepKind::ext_traversed: stats_.ext_traversed_states += n; break;
    }
}

void StepLedger::check_deadline() const {
    if (!budget_.deadline) return;
    auto elapsed = std::chrono::steady_clock::now() - start_;
    if (elapsed > *budget_.deadline) throw DeadlineExceeded();
}

std::string CrosswordsGrid::row_text() const {
    std::ostringstream os;
    for (int r = 0; r < 5; ++r) {
        for (int c = 0; c < 5; ++c) {
            if (c) os << ' ';
            os << cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
        if (r != 4) os << '\n';
    }
    return os.str();
}

} // namespace seal
