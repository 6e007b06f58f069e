#include "seal/domain.hpp"

#include "seal/domains/blocksworld.hpp"
#include "seal/domains/crosswords.hpp"
#include "seal/domains/game24.hpp"

namespace seal {

const Domain& domain_for(DomainKind kind) {
    static const game24::Game24Domain g24;
    static const crosswords::CrosswordsDomain cw;
    static const blocks::BlocksworldDomain bw;
    switch (kind) {
    case DomainKind::game24: return g24;
    case DomainKind::crosswords: return cw;
    case DomainKind::blocksworld: return bw;
    }
    throw std::logic_error("unknown domain kind");
}

bool replay_matches(const PlanningProblem& problem, const SearchState& state) {
    const Domain& dom = domain_for(problem.kind);
    SearchState cur = problem.initial_state;
    try {
        for (const Action& a : state.path) cur = dom.apply(problem, cur, a);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return cur.payload == state.payload;
}

} // namespace seal
