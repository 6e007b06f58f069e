#include "seal/domains/game24.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <sstream>

namespace seal::game24 {
namespace {

const Rational kTarget(24);

// Precedence levels for rendering: 0 additive, 1 multiplicative, 2 atom.
struct Expr {
    std::string text;
    int prec = 2;
};

std::string wrap(const Expr& e, int min_prec) {
    if (e.prec < min_prec) return "(" + e.text + ")";
    return e.text;
}

Expr combine(const Expr& a, char op, const Expr& b) {
    switch (op) {
    case '+': return {a.text + " + " + b.text, 0};
    case '-': return {a.text + " - " + wrap(b, 1), 0};
    case '*': return {wrap(a, 1) + " * " + wrap(b, 1), 1};
    case '/': return {wrap(a, 1) + " / " + wrap(b, 2), 1};
    default: throw std::logic_error("bad operator");
    }
}

Rational apply_op(const Rational& a, char op, const Rational& b) {
    switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b; // caller excludes zero divisors
    default: throw std::logic_error("bad operator");
    }
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// ---------------------------------------------------------------------------
// Expression parsing (no unary minus: the rule verifier only accepts the four
// binary operations, so "-4 + 28" does not count as using the number 4).
// ---------------------------------------------------------------------------

struct Node {
    bool leaf = false;
    Rational value; // leaf literal
    char op = 0;
    std::unique_ptr<Node> l, r;
};

struct Token {
    char sym; // '(' ')' '+' '-' '*' '/' or 'n' for a number
    Rational value;
};

bool tokenize(const std::string& text, const std::vector<Rational>& compound_literals,
              std::vector<Token>& out) {
    std::vector<std::string> spellings;
    for (const Rational& r : compound_literals)
        if (!r.is_integer()) spellings.push_back(r.str());

    std::size_t i = 0;
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '(' || c == ')' || c == '+' || c == '-' || c == '*' || c == '/') {
            out.push_back({c, {}});
            ++i;
            continue;
        }
        // UTF-8 multiplication and division signs.
        if (static_cast<unsigned char>(c) == 0xC3 && i + 1 < text.size()) {
            unsigned char d = static_cast<unsigned char>(text[i + 1]);
            if (d == 0x97) { out.push_back({'*', {}}); i += 2; continue; }
            if (d == 0xB7) { out.push_back({'/', {}}); i += 2; continue; }
        }
        if ((c == 'x' || c == 'X') &&
            (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
            out.push_back({'*', {}});
            ++i;
            continue;
        }
        if (is_digit(c)) {
            // A fraction-valued state number spelled "p/q" counts as one
            // literal, not a division.
            bool matched = false;
            for (const std::string& s : spellings) {
                if (text.compare(i, s.size(), s) == 0) {
                    std::size_t end = i + s.size();
                    if (end < text.size() && (is_digit(text[end]) || text[end] == '.')) continue;
                    Rational r;
                    if (!Rational::parse(s, r)) continue;
                    out.push_back({'n', r});
                    i = end;
                    matched = true;
                    break;
                }
            }
            if (matched) continue;
            std::size_t j = i;
            while (j < text.size() && is_digit(text[j])) ++j;
            std::int64_t whole = std::stoll(text.substr(i, j - i));
            Rational value(whole);
            if (j < text.size() && text[j] == '.' && j + 1 < text.size() && is_digit(text[j + 1])) {
                std::size_t k = j + 1;
                while (k < text.size() && is_digit(text[k])) ++k;
                std::string frac = text.substr(j + 1, k - j - 1);
                if (frac.size() > 15) return false;
                std::int64_t den = 1;
                for (std::size_t t = 0; t < frac.size(); ++t) den *= 10;
                value = value + Rational(std::stoll(frac), den);
                j = k;
            }
            out.push_back({'n', value});
            i = j;
            continue;
        }
        return false; // unexpected character
    }
    return true;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

    std::unique_ptr<Node> parse() {
        auto node = expr();
        if (!node || pos_ != toks_.size()) return nullptr;
        return node;
    }

private:
    std::unique_ptr<Node> expr() {
        auto left = term();
        if (!left) return nullptr;
        while (peek('+') || peek('-')) {
            char op = toks_[pos_++].sym;
            auto right = term();
            if (!right) return nullptr;
            auto node = std::make_unique<Node>();
            node->op = op;
            node->l = std::move(left);
            node->r = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    std::unique_ptr<Node> term() {
        auto left = factor();
        if (!left) return nullptr;
        while (peek('*') || peek('/')) {
            char op = toks_[pos_++].sym;
            auto right = factor();
            if (!right) return nullptr;
            auto node = std::make_unique<Node>();
            node->op = op;
            node->l = std::move(left);
            node->r = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    std::unique_ptr<Node> factor() {
        if (pos_ >= toks_.size()) return nullptr;
        if (toks_[pos_].sym == 'n') {
            auto node = std::make_unique<Node>();
            node->leaf = true;
            node->value = toks_[pos_++].value;
            return node;
        }
        if (toks_[pos_].sym == '(') {
            ++pos_;
            auto inner = expr();
            if (!inner || !peek(')')) return nullptr;
            ++pos_;
            return inner;
        }
        return nullptr;
    }

    bool peek(char c) const { return pos_ < toks_.size() && toks_[pos_].sym == c; }

    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
};

std::optional<Rational> eval_node(const Node& n) {
    if (n.leaf) return n.value;
    auto a = eval_node(*n.l);
    auto b = eval_node(*n.r);
    if (!a || !b) return std::nullopt;
    if (n.op == '/' && b->is_zero()) return std::nullopt;
    try {
        return apply_op(*a, n.op, *b);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void collect_literals(const Node& n, std::vector<Rational>& out) {
    if (n.leaf) {
        out.push_back(n.value);
        return;
    }
    collect_literals(*n.l, out);
    collect_literals(*n.r, out);
}

std::unique_ptr<Node> parse_text(const std::string& text,
                                 const std::vector<Rational>& compound_literals) {
    // Only the part before "=" is the expression; the right-hand side is the
    // claimed value and carries no information the evaluator trusts.
    std::string body = text;
    if (auto eq = body.find('='); eq != std::string::npos) body = body.substr(0, eq);
    std::vector<Token> toks;
    if (!tokenize(body, compound_literals, toks)) return nullptr;
    if (toks.empty()) return nullptr;
    return Parser(toks).parse();
}

const Game24Payload& payload_of(const SearchState& s) {
    return std::get<Game24Payload>(s.payload);
}

} // namespace

std::string key_of(const Game24Payload& payload) {
    std::ostringstream os;
    auto nums = sorted(payload.numbers);
    for (std::size_t i = 0; i < nums.size(); ++i) {
        if (i) os << ' ';
        os << nums[i].str();
    }
    return os.str();
}

Game24Payload make_payload(std::vector<Rational> numbers) {
    Game24Payload p;
    p.numbers = sorted(std::move(numbers));
    return p;
}

PlanningProblem make_problem(std::string id, const std::vector<std::int64_t>& numbers) {
    PlanningProblem problem;
    problem.problem_id = std::move(id);
    problem.kind = DomainKind::game24;
    std::vector<Rational> nums(numbers.begin(), numbers.end());
    problem.initial_state.payload = make_payload(nums);
    problem.initial_state.key = key_of(std::get<Game24Payload>(problem.initial_state.payload));
    problem.metadata["puzzle"] = problem.initial_state.key;
    return problem;
}

std::optional<Rational> eval_expression(const std::string& text,
                                        const std::vector<Rational>& compound_literals,
                                        std::vector<Rational>* literals) {
    auto root = parse_text(text, compound_literals);
    if (!root) return std::nullopt;
    auto value = eval_node(*root);
    if (!value) return std::nullopt;
    if (literals) collect_literals(*root, *literals);
    return value;
}

bool expression_solves(const std::vector<Rational>& numbers, const std::string& text) {
    std::vector<Rational> lits;
    auto value = eval_expression(text, numbers, &lits);
    if (!value || *value != kTarget) return false;
    return sorted(lits) == sorted(numbers);
}

bool verify_expression(const PlanningProblem& problem, const std::string& text) {
    return expression_solves(std::get<Game24Payload>(problem.initial_state.payload).numbers,
                             text);
}

// ---------------------------------------------------------------------------
// Domain interface
// ---------------------------------------------------------------------------

std::string Game24Domain::canonical_key(const StatePayload& payload) const {
    return key_of(std::get<Game24Payload>(payload));
}

std::vector<Successor> Game24Domain::decompose(const PlanningProblem&,
                                               const SearchState& state) const {
    const auto& nums = payload_of(state).numbers;
    std::vector<Successor> out;
    if (nums.size() < 2) return out;
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < nums.size(); ++i) {
        for (std::size_t j = i + 1; j < nums.size(); ++j) {
            const Rational a = nums[i], b = nums[j];
            struct Step {
                Rational lhs, rhs;
                char op;
                bool ok;
            };
            const Step steps[6] = {
                {a, b, '+', true},          {a, b, '*', true},
                {a, b, '-', true},          {b, a, '-', true},
                {a, b, '/', !b.is_zero()},  {b, a, '/', !a.is_zero()},
            };
            for (const Step& st : steps) {
                if (!st.ok) continue;
                Rational result;
                try {
                    result = apply_op(st.lhs, st.op, st.rhs);
                } catch (const std::exception&) {
                    continue; // overflow: drop the child rather than crash
                }
                std::vector<Rational> rest;
                rest.reserve(nums.size() - 1);
                for (std::size_t k = 0; k < nums.size(); ++k)
                    if (k != i && k != j) rest.push_back(nums[k]);
                rest.push_back(result);
                Game24Payload child_payload = make_payload(rest);
                std::string key = key_of(child_payload);
                if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
                seen.push_back(key);

                Game24Move move{st.lhs, st.rhs, result, st.op};
                Action action;
                action.move = move;
                action.label = st.lhs.str() + " " + st.op + " " + st.rhs.str() + " = " +
                               result.str() + "; (left: " + key + ")";
                Successor succ;
                succ.action = action;
                succ.state.payload = child_payload;
                succ.state.path = state.path;
                succ.state.path.push_back(action);
                succ.state.key = key;
                out.push_back(std::move(succ));
            }
        }
    }
    return out;
}

SearchState Game24Domain::apply(const PlanningProblem&, const SearchState& state,
                                const Action& action) const {
    const auto* move = std::get_if<Game24Move>(&action.move);
    if (!move) throw std::invalid_argument("not a Game of 24 action");
    std::vector<Rational> nums = payload_of(state).numbers;
    auto take = [&nums](const Rational& v) {
        auto it = std::find(nums.begin(), nums.end(), v);
        if (it == nums.end()) throw std::invalid_argument("operand not present in state");
        nums.erase(it);
    };
    take(move->lhs);
    take(move->rhs);
    if (move->op == '/' && move->rhs.is_zero())
        throw std::invalid_argument("division by zero");
    if (apply_op(move->lhs, move->op, move->rhs) != move->result)
        throw std::invalid_argument("action result does not match its operands");
    nums.push_back(move->result);
    SearchState next;
    next.payload = make_payload(nums);
    next.path = state.path;
    next.path.push_back(action);
    next.key = key_of(std::get<Game24Payload>(next.payload));
    return next;
}

bool Game24Domain::goal_possible(const PlanningProblem&, const SearchState& state) const {
    return payload_of(state).numbers.size() == 1;
}

bool Game24Domain::is_goal(const PlanningProblem&, const SearchState& state) const {
    const auto& nums = payload_of(state).numbers;
    return nums.size() == 1 && nums[0] == kTarget;
}

int Game24Domain::max_depth(const PlanningProblem& problem) const {
    const auto& nums = std::get<Game24Payload>(problem.initial_state.payload).numbers;
    return static_cast<int>(nums.size()) - 1;
}

Solution Game24Domain::solution_from_path(const PlanningProblem& problem,
                                          const SearchState& goal_state) const {
    auto text = splice_expression(problem, goal_state, kTarget.str());
    Solution sol;
    sol.kind = DomainKind::game24;
    sol.text = text ? (*text + " = 24") : "";
    return sol;
}

bool Game24Domain::verify(const PlanningProblem& problem, const Solution& solution) const {
    return verify_expression(problem, solution.text);
}

std::optional<Solution> Game24Domain::parse_solution(const PlanningProblem&,
                                                     const std::string& candidate_text) const {
    if (candidate_text.empty()) return std::nullopt;
    Solution sol;
    sol.kind = DomainKind::game24;
    sol.text = candidate_text;
    return sol;
}

std::optional<Solution> Game24Domain::verify_candidate(const PlanningProblem& problem,
                                                       const SearchState& state,
                                                       const std::string& candidate_text) const {
    const auto& nums = payload_of(state).numbers;
    if (!expression_solves(nums, candidate_text)) return std::nullopt;
    auto full = splice_expression(problem, state, candidate_text);
    if (!full) return std::nullopt;
    Solution sol;
    sol.kind = DomainKind::game24;
    sol.text = *full + " = 24";
    if (!verify(problem, sol)) return std::nullopt;
    return sol;
}

std::string Game24Domain::format_state(const PlanningProblem&, const SearchState& state) const {
    return key_of(payload_of(state));
}

std::string Game24Domain::format_action(const Action& action) const { return action.label; }

std::optional<Action> Game24Domain::parse_action(const std::string& label) const {
    std::string head = label;
    if (auto semi = head.find(';'); semi != std::string::npos) head = head.substr(0, semi);
    std::istringstream is(head);
    std::string a_txt, op_txt, b_txt, eq_txt, c_txt;
    if (!(is >> a_txt >> op_txt >> b_txt >> eq_txt >> c_txt)) return std::nullopt;
    std::string trailing;
    if (is >> trailing) return std::nullopt;
    if (eq_txt != "=") return std::nullopt;
    if (op_txt == "\xC3\x97" || op_txt == "x" || op_txt == "X") op_txt = "*";
    if (op_txt == "\xC3\xB7") op_txt = "/";
    if (op_txt.size() != 1 || std::string("+-*/").find(op_txt[0]) == std::string::npos)
        return std::nullopt;
    Game24Move move;
    move.op = op_txt[0];
    if (!Rational::parse(a_txt, move.lhs) || !Rational::parse(b_txt, move.rhs) ||
        !Rational::parse(c_txt, move.result))
        return std::nullopt;
    if (move.op == '/' && move.rhs.is_zero()) return std::nullopt;
    if (apply_op(move.lhs, move.op, move.rhs) != move.result) return std::nullopt;
    Action action;
    action.label = label;
    action.move = move;
    return action;
}

// ---------------------------------------------------------------------------
// Ground-truth oracle
// ---------------------------------------------------------------------------

bool ReachOracle::reachable(const std::vector<Rational>& numbers) {
    std::string key = key_of(make_payload(numbers));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    if (numbers.size() == 1) {
        ok = numbers[0] == kTarget;
    } else {
        auto nums = sorted(numbers);
        for (std::size_t i = 0; i < nums.size() && !ok; ++i) {
            for (std::size_t j = i + 1; j < nums.size() && !ok; ++j) {
                const Rational a = nums[i], b = nums[j];
                Rational results[6];
                int n = 0;
                results[n++] = a + b;
                results[n++] = a * b;
                results[n++] = a - b;
                results[n++] = b - a;
                if (!b.is_zero()) results[n++] = a / b;
                if (!a.is_zero()) results[n++] = b / a;
                for (int t = 0; t < n && !ok; ++t) {
                    std::vector<Rational> rest;
                    for (std::size_t k = 0; k < nums.size(); ++k)
                        if (k != i && k != j) rest.push_back(nums[k]);
                    rest.push_back(results[t]);
                    ok = reachable(rest);
                }
            }
        }
    }
    memo_[key] = ok;
    return ok;
}

std::optional<std::string> ReachOracle::expression(const std::vector<Rational>& numbers) {
    if (!reachable(numbers)) return std::nullopt;
    struct Item {
        Rational value;
        Expr expr;
    };
    std::function<std::optional<std::string>(std::vector<Item>&)> go =
        [&](std::vector<Item>& items) -> std::optional<std::string> {
        if (items.size() == 1)
            return items[0].value == kTarget ? std::optional<std::string>(items[0].expr.text)
                                             : std::nullopt;
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                struct Step {
                    bool reversed;
                    char op;
                };
                const Step steps[6] = {{false, '+'}, {false, '*'}, {false, '-'},
                                       {true, '-'},  {false, '/'}, {true, '/'}};
                for (const Step& st : steps) {
                    char op = st.op;
                    const Item& lhs = st.reversed ? items[j] : items[i];
                    const Item& rhs = st.reversed ? items[i] : items[j];
                    if (op == '/' && rhs.value.is_zero()) continue;
                    Rational result;
                    try {
                        result = apply_op(lhs.value, op, rhs.value);
                    } catch (const std::exception&) {
                        continue;
                    }
                    std::vector<Item> rest;
                    for (std::size_t k = 0; k < items.size(); ++k)
                        if (k != i && k != j) rest.push_back(items[k]);
                    std::vector<Rational> rest_values;
                    for (const auto& it : rest) rest_values.push_back(it.value);
                    rest_values.push_back(result);
                    if (!reachable(rest_values)) continue;
                    rest.push_back({result, combine(lhs.expr, op, rhs.expr)});
                    if (auto found = go(rest)) return found;
                }
            }
        }
        return std::nullopt;
    };
    std::vector<Item> items;
    for (const Rational& r : sorted(numbers)) items.push_back({r, Expr{r.str(), 2}});
    return go(items);
}

std::optional<std::string> splice_expression(const PlanningProblem& problem,
                                             const SearchState& state,
                                             const std::string& expr_over_state) {
    struct Avail {
        Rational value;
        Expr expr;
    };
    std::vector<Avail> avail;
    for (const Rational& r :
         std::get<Game24Payload>(problem.initial_state.payload).numbers)
        avail.push_back({r, Expr{r.str(), 2}});

    auto take = [&avail](const Rational& v) -> std::optional<Expr> {
        for (std::size_t i = 0; i < avail.size(); ++i) {
            if (avail[i].value == v) {
                Expr e = avail[i].expr;
                avail.erase(avail.begin() + i);
                return e;
            }
        }
        return std::nullopt;
    };

    for (const Action& action : state.path) {
        const auto* move = std::get_if<Game24Move>(&action.move);
        if (!move) return std::nullopt;
        auto lhs = take(move->lhs);
        auto rhs = take(move->rhs);
        if (!lhs || !rhs) return std::nullopt;
        avail.push_back({move->result, combine(*lhs, move->op, *rhs)});
    }

    {
        std::vector<Rational> have;
        for (const auto& a : avail) have.push_back(a.value);
        if (sorted(have) != sorted(payload_of(state).numbers)) return std::nullopt;
    }

    auto root = parse_text(expr_over_state, payload_of(state).numbers);
    if (!root) return std::nullopt;

    std::function<std::optional<Expr>(const Node&)> render =
        [&](const Node& n) -> std::optional<Expr> {
        if (n.leaf) return take(n.value);
        auto l = render(*n.l);
        if (!l) return std::nullopt;
        auto r = render(*n.r);
        if (!r) return std::nullopt;
        return combine(*l, n.op, *r);
    };
    auto rendered = render(*root);
    if (!rendered) return std::nullopt;
    return rendered->text;
}

} // namespace seal::game24
