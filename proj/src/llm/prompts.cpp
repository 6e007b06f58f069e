#include "seal/llm/prompts.hpp"

#include "seal/domain.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace seal::llm {
namespace {

const std::string kSolveGame24 = R"(Use the given numbers and basic arithmetic operations (+, -, *, /) to reach 24. Each step should only select two of the remaining numbers to calculate a new number, aiming to reduce the total count of numbers by merging the selected pair into their result. The steps should methodically progress towards constructing an expression that equals 24 when evaluated. Each remaining number can be only selected up to once. For example:

Input: 4 4 6 8
Steps:
step1: 4 + 8 = 12; (left: 4 6 12)
step2: 6 - 4 = 2; (left: 2 12)
step3: 2 * 12 = 24; (left: 24)
Answer: (6 - 4) * (4 + 8) = 24

Input: 1 1 4 6
Steps:
step1: 1 * 1 = 1; (left: 1 4 6)
step2: 1 * 4 = 4; (left: 4 6)
step3: 4 * 6 = 24; (left: 24)
Answer: 1 * 1 * 4 * 6 = 24

Ensure that each arithmetic operation is possible and leads to the correct remaining numbers. The final answer should correctly reflect the steps performed to achieve 24. If an error occurs in calculation, revise the final expression accordingly.
Given the following input, the generated output should be formatted exactly as above:
Input: {input})";

const std::string kSolveCrosswords = R"(Solve 5x5 mini crosswords by selecting appropriate words from provided candidate lists. Given an input of 5 horizontal clues and 5 vertical clues, a list of words is given for each clue.
Consider intersecting constraints with other words, solve this step by step, generate thoughts about 5-letter word from the corresponding list fits each clue, and then select the most suitable word for each clue.
Then an output of 5 rows, where each row is 5 letter separated by space.

# Few-shot example 1
Input:
h1. A lunar valley
h2. A fatty oil
h3. To entice
h4. To lower; to reduce
h5. A solitary person
v1. According to the roster
v2. Another name for Port-Francqui
v3. An illicit lover; a European lake
v4. To lisp
v5. To come in

Thoughts:
h1. A lunar valley: RILLE
h2. A fatty oil: OLEIN
h3. To entice: TEMPT
h4. To lower; to reduce: ABASE
h5. A solitary person: LONER
v1. According to the roster: ROTAL
v2. Another name for Port-Francqui: ILEBO
v3. An illicit lover; a European lake: LEMAN
v4. To lisp: LIPSE
v5. To come in: ENTER

Output:
R I L L E
O L E I N
T E M P T
A B A S E
L O N E R

Input:
{input})";

const std::string kValidityGame24 = R"(Your task is to analyze a mathematical game where the goal is to use basic arithmetic operations (+, -, *, /) to achieve the target number 24. You are given several sets of numbers. For each set, determine if it is possible (likely/unlikely) to achieve 24 using any combination of numbers and operations. For each set, each number must be used exactly once. If one of these sets are likely to obtain 24, return the answer Yes and these sets that are likely to reach to 24.

Examples:
Example 1:
Input:
State 0: 8 3 1
State 1: 6 4
State 2: 7 7 2

State Precheck:
Answer: yes; Reason: State 1 is likely to reach 24

Example 2:
Input:
State 0: 8
State 1: 11 2.66
State 2: 7 7

State Precheck:
Answer: no;

Example 3:
Input:
State 0: 24
State 1: 12

State Precheck:
Answer: yes; Reason: State 0 and State 2 can directly reach to 24 because the single number 24 is directly equal to 24, 24 = 24.

Given the following input sets, generate the output in the exact format above:
Input:
{input})";

const std::string kRankGame24 = R"(Evaluate if given numbers can reach 24, each given number must be used exactly once (sure/likely/impossible)
Current numbers: 10 14; Calculation: 10 + 14 = 24; Comment: I can obtain the 24 by using current numbers; Conclusion: sure
Current numbers: 11 12; Calculation: 11 + 12 = 23; Calculation: 12 - 11 = 1; Calculation: 11 * 12 = 132; Calculation: 11 / 12 = 0.91; Comment: I cannot obtain the 24 by using current numbers; Conclusion: impossible
Current numbers: 5 7 8; Calculation: 5 + 7 + 8 = 12 + 8 = 20; Calculation: (8 - 5) * 7 = 3 * 7 = 21; Comment: I cannot obtain 24 now, but numbers are within a reasonable range; Conclusion: likely
Given the following current number, the generated output should be formatted exactly as above:
Current number: {input};)";

const std::string kProposeDecomposition = R"(Decompose the current state into promising sub-states by applying a single action. Select only the few decompositions most likely to lead to the goal rather than enumerating every possibility. For example, "1 2 4 7" can be decomposed into "2 4 8" by "1 + 7" and "1 2 7" by "4 / 2".
List each proposed step on its own line, formatted exactly like:
{format_example}
Current state:
{input}
Proposed steps:)";

const std::string kBeamPropose = R"(Given the current state, propose up to {max_candidates} promising next steps toward the goal. Do not enumerate every possibility; list only the steps worth exploring, one per line, formatted exactly like:
{format_example}
Current state:
{input}
Possible next steps:)";

const std::string kBeamEval = R"(Evaluate if the given state can still reach the goal (sure/maybe/impossible). End your reply with "Conclusion: " followed by one of the three words.
State:
{input}
Conclusion:)";

const std::string kSelfSearchHigh = R"(You are a problem solver for the Game of 24. Given four numbers, your goal is to find a mathematical expression that equals 24 using each number exactly once, with the allowed operations being addition (+), subtraction (-), multiplication (*), and division (/). Follow these steps precisely:

# Game of 24 Rules
Rule 1. Each number must be used exactly once.
Rule 2. Use only basic operation (+-*/) for calculation.

# Input
You will receive four numbers. For example: "Input: 1 2 4 7"

# Instruction:
You are required to get 24 with the 4 input numbers by using the idea of search for your thoughts in the intermediate steps.

Wrap your your final solution in a special tag <solution> like <solution> 2 + 3 * 5 + 7 = 24 </solution>. Stop when find a correct solution.
Input: {input})";

const std::string kSelfSearchLow = R"(You are a problem solver for the Game of 24. Given four numbers, your goal is to find a mathematical expression that equals 24 using each number exactly once, with the allowed operations being addition (+), subtraction (-), multiplication (*), and division (/). Follow these steps precisely:
# Game of 24 Rules
Rule 1. Each number must be used exactly once.
Rule 2. Use only basic operation (+-*/) for calculation.
Rule 3. Not to generate code to solve the game. And not to return empty content.

# Input
You will receive four numbers. For example: "Input: 1 2 4 7"

# Instruction
You are required to get 24 with the 4 input numbers by using the idea of search to formalize your thoughts in the intermediate steps. Specifically, the idea search is based on the following stages:
Stage 1. State Precheck. Precheck if it is possible to obtain 24 from the numbers in the current state, where each number is used exactly once. Stop expansion in the current state if precheck fails.
Stage 2. Direct Solution Attempt. Attempt to directly find a solution using the current numbers by thinking step by step.
Stage 3. Check the the correctness of the generated direct solution. If correct, stop early and use it as the final solution. If not, jump to the next stage. Note that all numbers in the solution must from current state and be used exactly once.
Stage 4. Problem decompositon. Decompose current problem into several sub-problems by using basic operation (+-*/) to see if you can solve these subproblems to get 24. For instance. "1 2 4 7" can be decomposed into "2 4 8" by "1 + 7" and "1 2 7" by "4 / 2", where thinking about "2 4 8" is easier than " 1 2 4 7".
Stage 5. State ranks. After getting several decomposed sub-problems, you will evaluate each substate's potential to reach 24. The metric is sure = 1.0, likely = 0.5, impossible = 0.1. Then give a sorted substates list, highest potential first.

Repeat the above stages until a valid action is found. Note that you can conduct backtrace to switch to another subproblem if current subproblem cannot achieve 24. For example, if you find that "1 2 7" cannot achieve 24 even by further decomposition, like "2 7", "1 7" from "1 2 7" or even "14" from "2 7", you can backtrace to another high-layer subproblems like "2 4 8" until you finally find a solution.

Wrap your your final solution in a special tag <solution> like <solution> 2 + 3 * 5 + 7 = 24 </solution>. Stop when find a correct solution.
Input: {input})";

struct Entry {
    TemplateId id;
    const char* name;
    const std::string* body;
};

const std::array<Entry, 9>& table() {
    static const std::array<Entry, 9> entries = {{
        {TemplateId::p_solve_game24, "p_solve_game24", &kSolveGame24},
        {TemplateId::p_solve_crosswords, "p_solve_crosswords", &kSolveCrosswords},
        {TemplateId::p_c_game24, "p_c_game24", &kValidityGame24},
        {TemplateId::p_v_game24, "p_v_game24", &kRankGame24},
        {TemplateId::p_d, "p_d", &kProposeDecomposition},
        {TemplateId::self_search_high, "self_search_high", &kSelfSearchHigh},
        {TemplateId::self_search_low, "self_search_low", &kSelfSearchLow},
        {TemplateId::beam_propose, "beam_propose", &kBeamPropose},
        {TemplateId::beam_eval, "beam_eval", &kBeamEval},
    }};
    return entries;
}

} // namespace

std::string to_string(TemplateId id) {
    for (const Entry& e : table())
        if (e.id == id) return e.name;
    return "unknown";
}

std::optional<TemplateId> template_from(const std::string& name) {
    for (const Entry& e : table())
        if (name == e.name) return e.id;
    return std::nullopt;
}

const std::string& template_body(TemplateId id) {
    for (const Entry& e : table())
        if (e.id == id) return *e.body;
    throw std::logic_error("unknown template id");
}

std::string render_prompt(TemplateId id, const std::map<std::string, std::string>& vars) {
    const std::string& body = template_body(id);
    std::string out;
    out.reserve(body.size());
    for (std::size_t i = 0; i < body.size();) {
        if (body[i] != '{') {
            out += body[i++];
            continue;
        }
        std::size_t end = i + 1;
        while (end < body.size() &&
               (std::islower(static_cast<unsigned char>(body[end])) || body[end] == '_'))
            ++end;
        if (end < body.size() && body[end] == '}' && end > i + 1) {
            std::string name = body.substr(i + 1, end - i - 1);
            auto it = vars.find(name);
            if (it == vars.end())
                throw std::runtime_error("unresolved placeholder: " + name);
            out += it->second;
            i = end + 1;
        } else {
            out += body[i++];
        }
    }
    return out;
}

std::string build_self_search_prompt(bool low_level, const PlanningProblem& problem) {
    if (problem.kind != DomainKind::game24)
        throw std::invalid_argument("self-search prompts are defined for Game of 24");
    const Domain& dom = domain_for(problem.kind);
    std::map<std::string, std::string> vars{
        {"input", dom.format_state(problem, problem.initial_state)}};
    return render_prompt(low_level ? TemplateId::self_search_low : TemplateId::self_search_high,
                         vars);
}

} // namespace seal::llm
