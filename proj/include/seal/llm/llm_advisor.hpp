#pragma once

#include "seal/advisor.hpp"

namespace seal::llm {

std::shared_ptr<Advisor> make_llm_advisor(const AdvisorSpec& spec);

} // namespace seal::llm
