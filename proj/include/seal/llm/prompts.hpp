#pragma once

#include "seal/core.hpp"

#include <map>
#include <string>

namespace seal::llm {

enum class TemplateId {
    p_solve_game24,
    p_solve_crosswords,
    p_c_game24,
    p_v_game24,
    p_d,
    self_search_high,
    self_search_low,
    beam_propose,
    beam_eval,
};

std::string to_string(TemplateId id);
std::optional<TemplateId> template_from(const std::string& name);

const std::string& template_body(TemplateId id);

/// Substitutes {name} placeholders. Throws std::runtime_error naming the
/// placeholder when one is left unresolved.
std::string render_prompt(TemplateId id, const std::map<std::string, std::string>& vars);

/// Self-search prompt for a Game of 24 problem. `low_level` selects the
/// variant that spells out the staged search strategy.
std::string build_self_search_prompt(bool low_level, const PlanningProblem& problem);

} // namespace seal::llm
