#include "seal/domains/blocksworld.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace seal::blocks {
namespace {

constexpr const char* kTable = "#table";

const BlocksPayload& payload_of(const SearchState& s) {
    return std::get<BlocksPayload>(s.payload);
}

bool is_clear(const BlocksPayload& p, const std::string& block) {
    if (p.held == block) return false;
    for (const auto& [b, under] : p.below)
        if (under == block) return false;
    return true;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Parses "name(arg1,arg2)" or a bare name.
bool split_predicate(const std::string& text, std::string& name, std::vector<std::string>& args) {
    args.clear();
    auto open = text.find('(');
    if (open == std::string::npos) {
        name = text;
        return !name.empty();
    }
    if (text.back() != ')') return false;
    name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::string cur;
    for (char c : inner) {
        if (c == ',') {
            args.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) args.push_back(cur);
    return !name.empty();
}

bool goal_satisfied(const BlocksPayload& p, const std::set<std::string>& goal) {
    std::set<std::string> preds = predicates_of(p);
    for (const std::string& g : goal)
        if (!preds.count(g)) return false;
    return true;
}

} // namespace

std::set<std::string> predicates_of(const BlocksPayload& payload) {
    std::set<std::string> out;
    for (const auto& [block, under] : payload.below) {
        if (under == kTable)
            out.insert("on_table(" + block + ")");
        else
            out.insert("on(" + block + "," + under + ")");
        if (is_clear(payload, block)) out.insert("clear(" + block + ")");
    }
    if (payload.held.empty())
        out.insert("arm_empty");
    else
        out.insert("holding(" + payload.held + ")");
    return out;
}

std::string key_of(const BlocksPayload& payload) {
    std::set<std::string> preds = predicates_of(payload);
    std::ostringstream os;
    bool first = true;
    for (const std::string& p : preds) {
        if (!first) os << '|';
        first = false;
        os << p;
    }
    return os.str();
}

BlocksPayload payload_from_predicates(const std::vector<std::string>& predicates) {
    BlocksPayload p;
    std::set<std::string> blocks;
    for (const std::string& pred : predicates) {
        std::string name;
        std::vector<std::string> args;
        if (!split_predicate(pred, name, args))
            throw std::invalid_argument("malformed predicate: " + pred);
        name = lower(name);
        if (name == "on" && args.size() == 2) {
            if (p.below.count(args[0]))
                throw std::invalid_argument("block has two supports: " + args[0]);
            p.below[args[0]] = args[1];
            blocks.insert(args[0]);
            blocks.insert(args[1]);
        } else if ((name == "on_table" || name == "ontable") && args.size() == 1) {
            if (p.below.count(args[0]))
                throw std::invalid_argument("block has two supports: " + args[0]);
            p.below[args[0]] = kTable;
            blocks.insert(args[0]);
        } else if (name == "holding" && args.size() == 1) {
            if (!p.held.empty()) throw std::invalid_argument("two blocks held");
            p.held = args[0];
            blocks.insert(args[0]);
        } else if (name == "clear" || name == "arm_empty" || name == "armempty" ||
                   name == "handempty") {
            // derived facts; accepted and recomputed
        } else {
            throw std::invalid_argument("unknown predicate: " + pred);
        }
    }
    if (!p.held.empty() && p.below.count(p.held))
        throw std::invalid_argument("held block also has a support: " + p.held);
    for (const std::string& b : blocks) {
        if (b != p.held && !p.below.count(b))
            throw std::invalid_argument("block with no support status: " + b);
    }
    // Reject support cycles.
    for (const auto& [block, _] : p.below) {
        std::string cur = block;
        std::size_t hops = 0;
        while (cur != kTable) {
            auto it = p.below.find(cur);
            if (it == p.below.end()) break; // held or dangling support target
            cur = it->second;
            if (++hops > p.below.size()) throw std::invalid_argument("support cycle");
        }
    }
    return p;
}

std::vector<std::pair<BlocksMove, BlocksPayload>> applicable_moves(const BlocksPayload& payload) {
    std::vector<std::pair<BlocksMove, BlocksPayload>> out;
    std::vector<std::string> names;
    for (const auto& [b, _] : payload.below) names.push_back(b);
    if (!payload.held.empty()) names.push_back(payload.held);
    std::sort(names.begin(), names.end());

    if (payload.held.empty()) {
        for (const std::string& x : names) {
            auto it = payload.below.find(x);
            if (it == payload.below.end()) continue;
            if (it->second == kTable && is_clear(payload, x)) {
                BlocksMove m{"pickup", x, ""};
                out.emplace_back(m, apply_move(payload, m));
            }
        }
        for (const std::string& x : names) {
            auto it = payload.below.find(x);
            if (it == payload.below.end() || it->second == kTable) continue;
            if (is_clear(payload, x)) {
                BlocksMove m{"unstack", x, it->second};
                out.emplace_back(m, apply_move(payload, m));
            }
        }
    } else {
        BlocksMove put{"put", payload.held, ""};
        out.emplace_back(put, apply_move(payload, put));
        for (const std::string& y : names) {
            if (y == payload.held) continue;
            if (is_clear(payload, y)) {
                BlocksMove m{"stack", payload.held, y};
                out.emplace_back(m, apply_move(payload, m));
            }
        }
    }
    return out;
}

BlocksPayload apply_move(const BlocksPayload& payload, const BlocksMove& move) {
    BlocksPayload p = payload;
    const std::string verb = lower(move.verb);
    auto known = [&payload](const std::string& b) {
        return payload.below.count(b) || payload.held == b;
    };
    if (verb == "pickup" || verb == "pick-up") {
        if (!known(move.a)) throw std::invalid_argument("unknown block: " + move.a);
        if (!p.held.empty()) throw std::invalid_argument("arm not empty");
        auto it = p.below.find(move.a);
        if (it == p.below.end() || it->second != kTable)
            throw std::invalid_argument("block not on table: " + move.a);
        if (!is_clear(p, move.a)) throw std::invalid_argument("block not clear: " + move.a);
        p.below.erase(it);
        p.held = move.a;
    } else if (verb == "unstack") {
        if (!known(move.a) || !known(move.b))
            throw std::invalid_argument("unknown block in unstack");
        if (!p.held.empty()) throw std::invalid_argument("arm not empty");
        auto it = p.below.find(move.a);
        if (it == p.below.end() || it->second != move.b)
            throw std::invalid_argument("block not on " + move.b + ": " + move.a);
        if (!is_clear(p, move.a)) throw std::invalid_argument("block not clear: " + move.a);
        p.below.erase(it);
        p.held = move.a;
    } else if (verb == "put" || verb == "putdown" || verb == "put-down") {
        if (p.held != move.a) throw std::invalid_argument("not holding: " + move.a);
        p.below[move.a] = kTable;
        p.held.clear();
    } else if (verb == "stack") {
        if (p.held != move.a) throw std::invalid_argument("not holding: " + move.a);
        if (!known(move.b)) throw std::invalid_argument("unknown block: " + move.b);
        if (move.a == move.b) throw std::invalid_argument("cannot stack a block on itself");
        if (!is_clear(p, move.b)) throw std::invalid_argument("target not clear: " + move.b);
        p.below[move.a] = move.b;
        p.held.clear();
    } else {
        throw std::invalid_argument("unknown verb: " + move.verb);
    }
    return p;
}

int bfs_min_steps(const BlocksPayload& start, const std::set<std::string>& goal) {
    if (goal_satisfied(start, goal)) return 0;
    std::unordered_map<std::string, int> dist;
    dist[key_of(start)] = 0;
    std::deque<BlocksPayload> frontier{start};
    while (!frontier.empty()) {
        BlocksPayload cur = frontier.front();
        frontier.pop_front();
        int d = dist[key_of(cur)];
        for (auto& [move, next] : applicable_moves(cur)) {
            std::string k = key_of(next);
            if (dist.count(k)) continue;
            if (goal_satisfied(next, goal)) return d + 1;
            dist[k] = d + 1;
            frontier.push_back(next);
        }
    }
    return -1;
}

std::optional<std::vector<BlocksMove>> bfs_plan(const BlocksPayload& start,
                                                const std::set<std::string>& goal) {
    if (goal_satisfied(start, goal)) return std::vector<BlocksMove>{};
    struct NodeInfo {
        int parent = -1;
        BlocksMove move;
    };
    std::vector<BlocksPayload> nodes{start};
    std::vector<NodeInfo> info{{}};
    std::unordered_map<std::string, int> seen{{key_of(start), 0}};
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        BlocksPayload cur = nodes[head];
        for (auto& [move, next] : applicable_moves(cur)) {
            std::string k = key_of(next);
            if (seen.count(k)) continue;
            seen[k] = static_cast<int>(nodes.size());
            nodes.push_back(next);
            info.push_back({static_cast<int>(head), move});
            if (goal_satisfied(next, goal)) {
                std::vector<BlocksMove> plan;
                int at = static_cast<int>(nodes.size()) - 1;
                while (at > 0) {
                    plan.push_back(info[static_cast<std::size_t>(at)].move);
                    at = info[static_cast<std::size_t>(at)].parent;
                }
                std::reverse(plan.begin(), plan.end());
                return plan;
            }
        }
    }
    return std::nullopt;
}

bool validate_plan(const PlanningProblem& problem, const BlocksPlan& plan) {
    const auto& data = problem.blocks();
    int bound = data.min_steps * 12 / 10; // floor(1.2 * min_steps), exactly
    if (static_cast<int>(plan.steps.size()) > bound) return false;
    BlocksPayload cur = std::get<BlocksPayload>(problem.initial_state.payload);
    for (const BlocksMove& m : plan.steps) {
        try {
            cur = apply_move(cur, m);
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
    return goal_satisfied(cur, data.goal);
}

PlanningProblem make_problem(std::string id, const std::vector<std::string>& blocks,
                             const std::vector<std::string>& init,
                             const std::vector<std::string>& goal, int min_steps) {
    PlanningProblem problem;
    problem.problem_id = std::move(id);
    problem.kind = DomainKind::blocksworld;
    BlocksPayload payload = payload_from_predicates(init);
    for (const std::string& b : blocks)
        if (!payload.below.count(b) && payload.held != b)
            throw std::invalid_argument("declared block missing from init: " + b);
    BlocksProblemData data;
    data.blocks = blocks;
    data.min_steps = min_steps;
    for (const std::string& g : goal) {
        std::string name;
        std::vector<std::string> args;
        if (!split_predicate(g, name, args))
            throw std::invalid_argument("malformed goal predicate: " + g);
        data.goal.insert(g);
    }
    problem.data = std::move(data);
    problem.initial_state.payload = payload;
    problem.initial_state.key = key_of(payload);
    return problem;
}

// ---------------------------------------------------------------------------
// Domain interface
// ---------------------------------------------------------------------------

std::string BlocksworldDomain::canonical_key(const StatePayload& payload) const {
    return key_of(std::get<BlocksPayload>(payload));
}

std::vector<Successor> BlocksworldDomain::decompose(const PlanningProblem& problem,
                                                    const SearchState& state) const {
    std::vector<Successor> out;
    if (state.depth() >= max_depth(problem)) return out; // plan-length bound
    for (auto& [move, next_payload] : applicable_moves(payload_of(state))) {
        Action action;
        action.move = move;
        action.label = move.verb + " " + move.a + (move.b.empty() ? "" : " " + move.b);
        Successor succ;
        succ.action = action;
        succ.state.payload = next_payload;
        succ.state.path = state.path;
        succ.state.path.push_back(action);
        succ.state.key = key_of(next_payload);
        out.push_back(std::move(succ));
    }
    return out;
}

SearchState BlocksworldDomain::apply(const PlanningProblem&, const SearchState& state,
                                     const Action& action) const {
    const auto* move = std::get_if<BlocksMove>(&action.move);
    if (!move) throw std::invalid_argument("not a blocksworld action");
    SearchState next;
    next.payload = apply_move(payload_of(state), *move);
    next.path = state.path;
    next.path.push_back(action);
    next.key = key_of(std::get<BlocksPayload>(next.payload));
    return next;
}

bool BlocksworldDomain::goal_possible(const PlanningProblem&, const SearchState&) const {
    return true; // the goal predicates can hold at any depth
}

bool BlocksworldDomain::is_goal(const PlanningProblem& problem, const SearchState& state) const {
    return goal_satisfied(payload_of(state), problem.blocks().goal);
}

int BlocksworldDomain::max_depth(const PlanningProblem& problem) const {
    return problem.blocks().min_steps * 12 / 10;
}

Solution BlocksworldDomain::solution_from_path(const PlanningProblem&,
                                               const SearchState& goal_state) const {
    Solution sol;
    sol.kind = DomainKind::blocksworld;
    BlocksPlan plan;
    std::ostringstream os;
    for (std::size_t i = 0; i < goal_state.path.size(); ++i) {
        const auto* move = std::get_if<BlocksMove>(&goal_state.path[i].move);
        if (move) plan.steps.push_back(*move);
        if (i) os << "; ";
        os << goal_state.path[i].label;
    }
    sol.text = os.str();
    sol.body = plan;
    return sol;
}

bool BlocksworldDomain::verify(const PlanningProblem& problem, const Solution& solution) const {
    const auto* plan = std::get_if<BlocksPlan>(&solution.body);
    if (!plan) return false;
    return validate_plan(problem, *plan);
}

std::optional<Solution> BlocksworldDomain::parse_solution(const PlanningProblem&,
                                                          const std::string& candidate_text) const {
    BlocksPlan plan;
    std::istringstream is(candidate_text);
    std::string line;
    while (std::getline(is, line)) {
        auto action = parse_action(line);
        if (action) plan.steps.push_back(std::get<BlocksMove>(action->move));
    }
    if (plan.steps.empty()) return std::nullopt;
    Solution sol;
    sol.kind = DomainKind::blocksworld;
    sol.body = plan;
    std::ostringstream os;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
        const BlocksMove& m = plan.steps[i];
        if (i) os << "; ";
        os << m.verb << ' ' << m.a << (m.b.empty() ? "" : " " + m.b);
    }
    sol.text = os.str();
    return sol;
}

std::optional<Solution> BlocksworldDomain::verify_candidate(
    const PlanningProblem& problem, const SearchState& state,
    const std::string& candidate_text) const {
    // The candidate is a plan suffix from `state`; splice it onto the path.
    std::vector<BlocksMove> suffix;
    std::istringstream is(candidate_text);
    std::string line;
    while (std::getline(is, line)) {
        auto action = parse_action(line);
        if (!action) {
            // tolerate blank/heading lines, reject once actions have started
            bool blank = true;
            for (char c : line)
                blank &= std::isspace(static_cast<unsigned char>(c)) != 0;
            if (blank || suffix.empty()) continue;
            return std::nullopt;
        }
        suffix.push_back(std::get<BlocksMove>(action->move));
    }
    if (suffix.empty()) return std::nullopt;

    BlocksPlan full;
    for (const Action& a : state.path)
        if (const auto* m = std::get_if<BlocksMove>(&a.move)) full.steps.push_back(*m);
    for (const BlocksMove& m : suffix) full.steps.push_back(m);
    if (!validate_plan(problem, full)) return std::nullopt;

    Solution sol;
    sol.kind = DomainKind::blocksworld;
    sol.body = full;
    std::ostringstream os;
    for (std::size_t i = 0; i < full.steps.size(); ++i) {
        const BlocksMove& m = full.steps[i];
        if (i) os << "; ";
        os << m.verb << ' ' << m.a << (m.b.empty() ? "" : " " + m.b);
    }
    sol.text = os.str();
    return sol;
}

std::string BlocksworldDomain::format_state(const PlanningProblem&,
                                            const SearchState& state) const {
    std::set<std::string> preds = predicates_of(payload_of(state));
    std::ostringstream os;
    bool first = true;
    for (const std::string& p : preds) {
        if (!first) os << ", ";
        first = false;
        os << p;
    }
    return os.str();
}

std::string BlocksworldDomain::format_action(const Action& action) const { return action.label; }

std::optional<Action> BlocksworldDomain::parse_action(const std::string& label) const {
    std::istringstream is(label);
    std::string verb, a, b, trailing;
    if (!(is >> verb >> a)) return std::nullopt;
    verb = lower(verb);
    bool has_b = static_cast<bool>(is >> b);
    if (is >> trailing) return std::nullopt;
    BlocksMove move;
    if (verb == "pickup" || verb == "pick-up") {
        if (has_b) return std::nullopt;
        move = {"pickup", a, ""};
    } else if (verb == "put" || verb == "putdown" || verb == "put-down") {
        if (has_b) return std::nullopt;
        move = {"put", a, ""};
    } else if (verb == "stack") {
        if (!has_b) return std::nullopt;
        move = {"stack", a, b};
    } else if (verb == "unstack") {
        if (!has_b) return std::nullopt;
        move = {"unstack", a, b};
    } else {
        return std::nullopt;
    }
    Action action;
    action.label = label;
    action.move = move;
    return action;
}

} // namespace seal::blocks
