#pragma once

#include "seal/core.hpp"

#include <optional>
#include <set>
#include <string>

namespace seal::llm {

/// Extracts the canonical answer from free-form model output: the final
/// "Answer:" expression for Game of 24, the 5x5 letter block after "Output:"
/// for crosswords, the action lines for Blocksworld. Absent when nothing
/// usable is found; never throws.
std::optional<std::string> parse_answer(DomainKind kind, const std::string& text);

struct ValidityParse {
    bool yes = false;
    std::set<int> states; // indices the reply names as likely to reach the goal
};

/// Parses a state-precheck reply ("Answer: yes; Reason: State 1 ...").
std::optional<ValidityParse> parse_validity(const std::string& text);

enum class ValueBucket { sure, likely, impossible };

/// Parses a ranking reply's "Conclusion: sure|likely|impossible" ("maybe" is
/// read as the middle bucket).
std::optional<ValueBucket> parse_value(const std::string& text);

/// sure = 1.0, likely = 0.5, impossible = 0.1
double bucket_score(ValueBucket bucket);

/// Content of the LAST <solution>...</solution> span, stripped.
std::optional<std::string> extract_solution_tag(const std::string& text);

} // namespace seal::llm
