#include "seal/harness/dataset.hpp"

#include "seal/domains/blocksworld.hpp"
#include "seal/domains/crosswords.hpp"
#include "seal/domains/game24.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace seal::harness {
namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<PlanningProblem> load_game24(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset: " + path);
    std::vector<PlanningProblem> out;
    std::string line;
    int row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            if (cells.size() < 3 || trim(cells[0]) != "index" || trim(cells[1]) != "puzzle" ||
                trim(cells[2]) != "difficulty_rank")
                throw DatasetError(path + ": row 1: expected header index,puzzle,difficulty_rank");
            continue;
        }
        if (cells.size() < 3)
            throw DatasetError(path + ": row " + std::to_string(row) + ": expected 3 columns");
        int index = 0, rank = 0;
        try {
            index = std::stoi(trim(cells[0]));
            rank = std::stoi(trim(cells[2]));
        } catch (const std::exception&) {
            throw DatasetError(path + ": row " + std::to_string(row) +
                               ": index/difficulty_rank must be integers");
        }
        std::istringstream nums(trim(cells[1]));
        std::vector<std::int64_t> numbers;
        std::int64_t v;
        while (nums >> v) numbers.push_back(v);
        if (numbers.size() != 4)
            throw DatasetError(path + ": row " + std::to_string(row) +
                               ": field puzzle must hold four integers");
        PlanningProblem problem = game24::make_problem("g24-" + std::to_string(index), numbers);
        problem.difficulty_rank = rank;
        problem.metadata["source_index"] = std::to_string(index);
        out.push_back(std::move(problem));
    }
    if (!header_seen) throw DatasetError(path + ": empty file");
    return out;
}

std::vector<PlanningProblem> load_crosswords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DatasetError(path + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array()) throw DatasetError(path + ": expected a JSON array");
    std::vector<PlanningProblem> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& item = doc[i];
        std::string where = path + ": instance " + std::to_string(i);
        auto fail = [&where](const std::string& what) { throw DatasetError(where + ": " + what); };
        if (!item.contains("clues") || !item["clues"].is_array() || item["clues"].size() != 10)
            fail("field clues must hold 10 strings");
        if (!item.contains("candidates") || !item["candidates"].is_array() ||
            item["candidates"].size() != 10)
            fail("field candidates must hold 10 word lists");
        CrosswordsProblemData data;
        for (int c = 0; c < 10; ++c) {
            data.clues[c] = item["clues"][static_cast<std::size_t>(c)].get<std::string>();
            const json& list = item["candidates"][static_cast<std::size_t>(c)];
            if (!list.is_array() || list.size() < 6 || list.size() > 11)
                fail("candidates[" + std::to_string(c) + "] must hold 6 to 11 words");
            for (const auto& w : list) {
                std::string word = w.get<std::string>();
                if (word.size() != 5)
                    fail("candidates[" + std::to_string(c) + "] word \"" + word +
                         "\" is not 5 letters");
                data.candidates[c].push_back(word);
            }
        }
        if (item.contains("ground_truth")) {
            const json& rows = item["ground_truth"];
            if (!rows.is_array() || rows.size() != 5) fail("ground_truth must hold 5 rows");
            CrosswordsGrid grid;
            for (int r = 0; r < 5; ++r) {
                std::string rowtext = rows[static_cast<std::size_t>(r)].get<std::string>();
                std::string letters;
                for (char ch : rowtext)
                    if (std::isalpha(static_cast<unsigned char>(ch)))
                        letters += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                if (letters.size() != 5)
                    fail("ground_truth row " + std::to_string(r) + " is not 5 letters");
                for (int c = 0; c < 5; ++c)
                    grid.cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                        letters[static_cast<std::size_t>(c)];
            }
            data.ground_truth = grid;
            // every ground-truth word must sit in its clue's candidate list,
            // otherwise game-level PR is unreachable by construction
            for (int c = 0; c < 10; ++c) {
                std::string word;
                for (int k = 0; k < 5; ++k) {
                    int row = c < 5 ? c : k;
                    int col = c < 5 ? k : c - 5;
                    word += grid.cell[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
                }
                const auto& list = data.candidates[c];
                bool found = false;
                for (const auto& w : list) {
                    std::string up = w;
                    for (char& ch : up)
                        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                    found |= up == word;
                }
                if (!found)
                    fail("ground-truth word for clue " + crosswords::clue_name(c) +
                         " is missing from its candidate list");
            }
        }
        PlanningProblem problem =
            crosswords::make_problem("cw-" + std::to_string(i), std::move(data));
        problem.difficulty_rank = static_cast<int>(i) + 1;
        if (item.contains("difficulty_rank"))
            problem.difficulty_rank = item["difficulty_rank"].get<int>();
        problem.metadata["source_index"] = std::to_string(i);
        out.push_back(std::move(problem));
    }
    return out;
}

std::vector<PlanningProblem> load_blocksworld(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DatasetError(path + ": invalid JSON: " + e.what());
    }
    if (!doc.is_array()) throw DatasetError(path + ": expected a JSON array");
    std::vector<PlanningProblem> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& item = doc[i];
        std::string where = path + ": instance " + std::to_string(i);
        auto fail = [&where](const std::string& what) { throw DatasetError(where + ": " + what); };
        if (!item.contains("blocks") || !item.contains("init") || !item.contains("goal") ||
            !item.contains("min_steps"))
            fail("fields blocks, init, goal, min_steps are required");
        std::vector<std::string> blocks, init, goal;
        for (const auto& b : item["blocks"]) blocks.push_back(b.get<std::string>());
        for (const auto& p : item["init"]) init.push_back(p.get<std::string>());
        for (const auto& p : item["goal"]) goal.push_back(p.get<std::string>());
        int min_steps = item["min_steps"].get<int>();
        PlanningProblem problem;
        try {
            problem = blocks::make_problem("bw-" + std::to_string(i), blocks, init, goal,
                                           min_steps);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        int recomputed = blocks::bfs_min_steps(
            std::get<BlocksPayload>(problem.initial_state.payload), problem.blocks().goal);
        if (recomputed < 0) fail("goal unreachable from init");
        if (recomputed != min_steps)
            fail("min_steps mismatch: file says " + std::to_string(min_steps) +
                 ", BFS optimum is " + std::to_string(recomputed));
        problem.difficulty_rank = min_steps;
        problem.metadata["source_index"] = std::to_string(i);
        problem.metadata["min_steps"] = std::to_string(min_steps);
        out.push_back(std::move(problem));
    }
    return out;
}

} // namespace

std::vector<PlanningProblem> load_dataset(DomainKind kind, const std::string& path) {
    switch (kind) {
    case DomainKind::game24: return load_game24(path);
    case DomainKind::crosswords: return load_crosswords(path);
    case DomainKind::blocksworld: return load_blocksworld(path);
    }
    throw DatasetError("unknown dataset kind");
}

std::vector<PlanningProblem> load_dataset(const DatasetRef& ref) {
    std::vector<PlanningProblem> all = load_dataset(ref.kind, ref.path);
    if (!ref.index_lo && !ref.index_hi) return all;
    std::vector<PlanningProblem> out;
    for (auto& p : all) {
        int index = std::stoi(p.metadata.at("source_index"));
        if (ref.index_lo && index < *ref.index_lo) continue;
        if (ref.index_hi && index > *ref.index_hi) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::array<std::vector<std::size_t>, 3> bucket_difficulty(
    const std::vector<PlanningProblem>& problems) {
    std::vector<std::size_t> order(problems.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&problems](std::size_t a, std::size_t b) {
        return problems[a].difficulty_rank < problems[b].difficulty_rank;
    });
    std::array<std::vector<std::size_t>, 3> buckets;
    std::size_t n = order.size();
    std::size_t base = n / 3, rem = n % 3;
    std::size_t at = 0;
    for (std::size_t level = 0; level < 3; ++level) {
        std::size_t size = base + (level < rem ? 1 : 0);
        for (std::size_t k = 0; k < size; ++k) buckets[level].push_back(order[at++]);
    }
    return buckets;
}

} // namespace seal::harness
