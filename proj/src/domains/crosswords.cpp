#include "seal/domains/crosswords.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace seal::crosswords {
namespace {

const CrosswordsPayload& payload_of(const SearchState& s) {
    return std::get<CrosswordsPayload>(s.payload);
}

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

int first_unassigned(const CrosswordsPayload& p) {
    for (int i = 0; i < 10; ++i)
        if (p.choice[i] < 0) return i;
    return -1;
}

} // namespace

std::string clue_name(int clue) {
    return (clue < 5 ? "h" : "v") + std::to_string(clue % 5 + 1);
}

std::optional<int> clue_from_name(const std::string& name) {
    if (name.size() != 2) return std::nullopt;
    char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    if (kind != 'h' && kind != 'v') return std::nullopt;
    if (name[1] < '1' || name[1] > '5') return std::nullopt;
    int idx = name[1] - '1';
    return kind == 'h' ? idx : idx + 5;
}

std::string assigned_word(const PlanningProblem& problem, const CrosswordsPayload& payload,
                          int clue) {
    int c = payload.choice[clue];
    if (c < 0) return "";
    return problem.crosswords().candidates[clue][static_cast<std::size_t>(c)];
}

char letter_at(const PlanningProblem& problem, const CrosswordsPayload& payload, int row,
               int col) {
    std::string h = assigned_word(problem, payload, row);
    if (!h.empty()) return h[static_cast<std::size_t>(col)];
    std::string v = assigned_word(problem, payload, 5 + col);
    if (!v.empty()) return v[static_cast<std::size_t>(row)];
    return 0;
}

bool placement_consistent(const PlanningProblem& problem, const CrosswordsPayload& payload,
                          int clue, const std::string& word) {
    if (word.size() != 5) return false;
    for (int k = 0; k < 5; ++k) {
        int row = clue < 5 ? clue : k;
        int col = clue < 5 ? k : clue - 5;
        char pinned = letter_at(problem, payload, row, col);
        if (pinned && pinned != word[static_cast<std::size_t>(k)]) return false;
    }
    return true;
}

CrosswordsGrid grid_of(const PlanningProblem& problem, const CrosswordsPayload& payload) {
    CrosswordsGrid g;
    for (auto& row : g.cell) row.fill('.');
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            char ch = letter_at(problem, payload, r, c);
            if (ch) g.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch;
        }
    return g;
}

Score score_grid(const CrosswordsGrid& solution, const CrosswordsGrid& truth) {
    Score s;
    int letters = 0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            letters += solution.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                       truth.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    int words = 0;
    for (int r = 0; r < 5; ++r) {
        bool match = true;
        for (int c = 0; c < 5; ++c)
            match &= solution.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                     truth.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        words += match;
    }
    for (int c = 0; c < 5; ++c) {
        bool match = true;
        for (int r = 0; r < 5; ++r)
            match &= solution.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] ==
                     truth.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        words += match;
    }
    s.letter_pr = letters / 25.0;
    s.word_pr = words / 10.0;
    s.game_pr = letters == 25 ? 1 : 0;
    return s;
}

PlanningProblem make_problem(std::string id, CrosswordsProblemData data) {
    for (auto& list : data.candidates)
        for (auto& w : list) w = upper(w);
    PlanningProblem problem;
    problem.problem_id = std::move(id);
    problem.kind = DomainKind::crosswords;
    problem.data = std::move(data);
    problem.initial_state.payload = CrosswordsPayload{};
    problem.initial_state.key = "";
    return problem;
}

// ---------------------------------------------------------------------------
// Domain interface
// ---------------------------------------------------------------------------

std::string CrosswordsDomain::canonical_key(const StatePayload& payload) const {
    const auto& p = std::get<CrosswordsPayload>(payload);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 10; ++i) {
        if (p.choice[i] < 0) continue;
        if (!first) os << '|';
        first = false;
        os << clue_name(i) << '=' << p.choice[i];
    }
    return os.str();
}

std::vector<Successor> CrosswordsDomain::decompose(const PlanningProblem& problem,
                                                   const SearchState& state) const {
    std::vector<Successor> out;
    const auto& payload = payload_of(state);
    int clue = first_unassigned(payload);
    if (clue < 0) return out;
    const auto& words = problem.crosswords().candidates[clue];
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (!placement_consistent(problem, payload, clue, words[w])) continue;
        CrosswordsMove move{clue, words[w]};
        Action action;
        action.move = move;
        action.label = clue_name(clue) + " = " + words[w];
        Successor succ;
        CrosswordsPayload next = payload;
        next.choice[clue] = static_cast<int>(w);
        succ.action = action;
        succ.state.payload = next;
        succ.state.path = state.path;
        succ.state.path.push_back(action);
        succ.state.key = canonical_key(succ.state.payload);
        out.push_back(std::move(succ));
    }
    return out;
}

SearchState CrosswordsDomain::apply(const PlanningProblem& problem, const SearchState& state,
                                    const Action& action) const {
    const auto* move = std::get_if<CrosswordsMove>(&action.move);
    if (!move) throw std::invalid_argument("not a crosswords action");
    const auto& payload = payload_of(state);
    if (move->clue < 0 || move->clue >= 10) throw std::invalid_argument("bad clue index");
    if (payload.choice[move->clue] >= 0) throw std::invalid_argument("clue already assigned");
    const auto& words = problem.crosswords().candidates[move->clue];
    auto it = std::find(words.begin(), words.end(), upper(move->word));
    if (it == words.end()) throw std::invalid_argument("word not in the clue's candidate list");
    if (!placement_consistent(problem, payload, move->clue, *it))
        throw std::invalid_argument("word contradicts crossing letters");
    SearchState next;
    CrosswordsPayload p = payload;
    p.choice[move->clue] = static_cast<int>(it - words.begin());
    next.payload = p;
    next.path = state.path;
    next.path.push_back(action);
    next.key = canonical_key(next.payload);
    return next;
}

bool CrosswordsDomain::goal_possible(const PlanningProblem&, const SearchState& state) const {
    return payload_of(state).assigned_count() == 10;
}

bool CrosswordsDomain::is_goal(const PlanningProblem& problem, const SearchState& state) const {
    const auto& payload = payload_of(state);
    if (payload.assigned_count() != 10) return false;
    // Assignments are consistency-checked as they are made; re-verify the
    // intersections so the goal test is meaningful on hand-built states too.
    for (int clue = 0; clue < 10; ++clue) {
        std::string w = assigned_word(problem, payload, clue);
        for (int k = 0; k < 5; ++k) {
            int row = clue < 5 ? clue : k;
            int col = clue < 5 ? k : clue - 5;
            char cross = clue < 5 ? assigned_word(problem, payload, 5 + col)[row]
                                  : assigned_word(problem, payload, row)[col];
            if (w[static_cast<std::size_t>(k)] != cross) return false;
        }
    }
    return true;
}

int CrosswordsDomain::max_depth(const PlanningProblem&) const { return 10; }

Solution CrosswordsDomain::solution_from_path(const PlanningProblem& problem,
                                              const SearchState& goal_state) const {
    Solution sol;
    sol.kind = DomainKind::crosswords;
    CrosswordsGrid grid = grid_of(problem, payload_of(goal_state));
    sol.text = grid.row_text();
    sol.body = grid;
    return sol;
}

bool CrosswordsDomain::verify(const PlanningProblem& problem, const Solution& solution) const {
    const auto* grid = std::get_if<CrosswordsGrid>(&solution.body);
    if (!grid) return false;
    const auto& data = problem.crosswords();
    for (int clue = 0; clue < 10; ++clue) {
        std::string word;
        for (int k = 0; k < 5; ++k) {
            int row = clue < 5 ? clue : k;
            int col = clue < 5 ? k : clue - 5;
            word += grid->cell[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        }
        const auto& list = data.candidates[clue];
        if (std::find(list.begin(), list.end(), word) == list.end()) return false;
    }
    return true;
}

std::optional<Solution> CrosswordsDomain::parse_solution(const PlanningProblem&,
                                                         const std::string& candidate_text) const {
    // A candidate is a full grid; rows are candidate_text lines.
    CrosswordsGrid grid;
    std::istringstream is(candidate_text);
    std::string line;
    int row = 0;
    while (row < 5 && std::getline(is, line)) {
        std::string letters;
        for (char c : line)
            if (std::isalpha(static_cast<unsigned char>(c)))
                letters += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (letters.empty()) continue;
        if (letters.size() != 5) return std::nullopt;
        for (int c = 0; c < 5; ++c)
            grid.cell[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
                letters[static_cast<std::size_t>(c)];
        ++row;
    }
    if (row != 5) return std::nullopt;
    Solution sol;
    sol.kind = DomainKind::crosswords;
    sol.body = grid;
    sol.text = grid.row_text();
    return sol;
}

std::optional<Solution> CrosswordsDomain::verify_candidate(
    const PlanningProblem& problem, const SearchState&, const std::string& candidate_text) const {
    auto sol = parse_solution(problem, candidate_text);
    if (!sol || !verify(problem, *sol)) return std::nullopt;
    return sol;
}

std::string CrosswordsDomain::format_state(const PlanningProblem& problem,
                                           const SearchState& state) const {
    const auto& payload = payload_of(state);
    std::ostringstream os;
    for (int clue = 0; clue < 10; ++clue) {
        std::string w = assigned_word(problem, payload, clue);
        os << clue_name(clue) << ": " << (w.empty() ? "?" : w);
        if (clue != 9) os << '\n';
    }
    return os.str();
}

std::string CrosswordsDomain::format_action(const Action& action) const { return action.label; }

std::optional<Action> CrosswordsDomain::parse_action(const std::string& label) const {
    std::istringstream is(label);
    std::string name, eq, word;
    if (!(is >> name >> eq >> word)) return std::nullopt;
    std::string trailing;
    if (is >> trailing) return std::nullopt;
    if (eq != "=") return std::nullopt;
    auto clue = clue_from_name(name);
    if (!clue) return std::nullopt;
    word = upper(word);
    if (word.size() != 5) return std::nullopt;
    for (char c : word)
        if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
    Action action;
    action.label = label;
    action.move = CrosswordsMove{*clue, word};
    return action;
}

// ---------------------------------------------------------------------------
// Completion oracle
// ---------------------------------------------------------------------------

bool CompletionOracle::completable(const CrosswordsPayload& payload) {
    CrosswordsDomain domain;
    std::string key = domain.canonical_key(StatePayload{payload});
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    int clue = first_unassigned(payload);
    if (clue < 0) {
        ok = true;
    } else {
        const auto& words = problem_.crosswords().candidates[clue];
        for (std::size_t w = 0; w < words.size() && !ok; ++w) {
            if (!placement_consistent(problem_, payload, clue, words[w])) continue;
            CrosswordsPayload next = payload;
            next.choice[clue] = static_cast<int>(w);
            ok = completable(next);
        }
    }
    memo_[key] = ok;
    return ok;
}

std::optional<CrosswordsPayload> CompletionOracle::complete(const CrosswordsPayload& payload) {
    if (!completable(payload)) return std::nullopt;
    CrosswordsPayload cur = payload;
    for (int clue = first_unassigned(cur); clue >= 0; clue = first_unassigned(cur)) {
        const auto& words = problem_.crosswords().candidates[clue];
        bool advanced = false;
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (!placement_consistent(problem_, cur, clue, words[w])) continue;
            CrosswordsPayload next = cur;
            next.choice[clue] = static_cast<int>(w);
            if (completable(next)) {
                cur = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt; // unreachable given completable()
    }
    return cur;
}

} // namespace seal::crosswords
