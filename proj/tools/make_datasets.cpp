// Generates the benchmark dataset files consumed by the harness:
//   game24.csv        every solvable four-number puzzle over 1..13, ranked
//                     easiest-first by how much of its decomposition graph
//                     stays solvable (a deterministic difficulty proxy)
//   crosswords_N.json synthetic 5x5 puzzles with candidate lists of 6-8 words
//   blocksworld_N.json random block arrangements with BFS-optimal min_steps

#include "seal/domains/blocksworld.hpp"
#include "seal/domains/crosswords.hpp"
#include "seal/domains/game24.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

using nlohmann::json;
using namespace seal;

namespace {

// Count of distinct solvable states in the puzzle's decomposition graph.
int solvable_state_count(game24::ReachOracle& oracle, const std::vector<Rational>& numbers) {
    std::set<std::string> seen;
    int count = 0;
    std::function<void(const std::vector<Rational>&)> walk =
        [&](const std::vector<Rational>& nums) {
            if (!oracle.reachable(nums)) return;
            std::string key = game24::key_of(game24::make_payload(nums));
            if (!seen.insert(key).second) return;
            ++count;
            if (nums.size() < 2) return;
            auto sorted = nums;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < sorted.size(); ++i)
                for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                    const Rational a = sorted[i], b = sorted[j];
                    std::vector<Rational> results{a + b, a * b, a - b, b - a};
                    if (!b.is_zero()) results.push_back(a / b);
                    if (!a.is_zero()) results.push_back(b / a);
                    for (const Rational& r : results) {
                        std::vector<Rational> rest;
                        for (std::size_t k = 0; k < sorted.size(); ++k)
                            if (k != i && k != j) rest.push_back(sorted[k]);
                        rest.push_back(r);
                        walk(rest);
                    }
                }
        };
    walk(numbers);
    return count;
}

void write_game24(const std::string& path) {
    struct Puzzle {
        std::array<int, 4> nums;
        int score;
        std::string text;
    };
    std::vector<Puzzle> puzzles;
    game24::ReachOracle oracle;
    for (int a = 1; a <= 13; ++a)
        for (int b = a; b <= 13; ++b)
            for (int c = b; c <= 13; ++c)
                for (int d = c; d <= 13; ++d) {
                    std::vector<Rational> nums{a, b, c, d};
                    if (!oracle.reachable(nums)) continue;
                    Puzzle p;
                    p.nums = {a, b, c, d};
                    p.score = solvable_state_count(oracle, nums);
                    p.text = std::to_string(a) + " " + std::to_string(b) + " " +
                             std::to_string(c) + " " + std::to_string(d);
                    puzzles.push_back(std::move(p));
                }
    std::stable_sort(puzzles.begin(), puzzles.end(), [](const Puzzle& x, const Puzzle& y) {
        if (x.score != y.score) return x.score > y.score; // more solvable states = easier
        return x.text < y.text;
    });
    std::ofstream out(path);
    out << "index,puzzle,difficulty_rank\n";
    for (std::size_t i = 0; i < puzzles.size(); ++i)
        out << i + 1 << ',' << puzzles[i].text << ',' << i + 1 << '\n';
    std::cout << path << ": " << puzzles.size() << " solvable puzzles\n";
}

void write_crosswords(const std::string& path, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto letter = [&rng]() {
        static const std::string pool = "AAABCDEEEFGHIIJKLLMNNOOPRRSSTTUVWY";
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    json all = json::array();
    for (int inst = 0; inst < count; ++inst) {
        std::array<std::array<char, 5>, 5> grid;
        for (auto& row : grid)
            for (char& c : row) c = letter();
        auto word_of = [&grid](int clue) {
            std::string w;
            for (int k = 0; k < 5; ++k)
                w += clue < 5 ? grid[static_cast<std::size_t>(clue)][static_cast<std::size_t>(k)]
                              : grid[static_cast<std::size_t>(k)][static_cast<std::size_t>(clue - 5)];
            return w;
        };
        json clues = json::array(), candidates = json::array(), truth_rows = json::array();
        for (int clue = 0; clue < 10; ++clue) {
            std::string truth = word_of(clue);
            int list_len = 6 + static_cast<int>(rng() % 3); // 6..8
            std::vector<std::string> list{truth};
            while (static_cast<int>(list.size()) < list_len) {
                std::string w;
                if (rng() % 10 < 3) {
                    // decoy sharing 2 letters with the truth, in position
                    w = truth;
                    for (int k = 0; k < 3; ++k)
                        w[rng() % 5] = letter();
                    if (w == truth) continue;
                } else {
                    for (int k = 0; k < 5; ++k) w += letter();
                }
                if (std::find(list.begin(), list.end(), w) == list.end()) list.push_back(w);
            }
            std::shuffle(list.begin(), list.end(), rng);
            clues.push_back("synthetic clue " + crosswords::clue_name(clue) + " of instance " +
                            std::to_string(inst));
            candidates.push_back(list);
        }
        for (int r = 0; r < 5; ++r) {
            std::string row;
            for (int c = 0; c < 5; ++c)
                row += grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            truth_rows.push_back(row);
        }
        all.push_back({{"clues", clues},
                       {"candidates", candidates},
                       {"ground_truth", truth_rows},
                       {"difficulty_rank", inst + 1}});
    }
    std::ofstream out(path);
    out << all.dump(1) << '\n';
    std::cout << path << ": " << count << " crosswords instances\n";
}

void write_blocksworld(const std::string& path, int count, std::uint64_t seed, int min_lo,
                       int min_hi) {
    std::mt19937_64 rng(seed);
    json all = json::array();
    int made = 0;
    while (made < count) {
        int n = 4 + static_cast<int>(rng() % 2); // 4 or 5 blocks
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        auto random_config = [&rng, &names]() {
            BlocksPayload p;
            std::vector<std::string> tops; // current stack tops
            for (const std::string& b : names) {
                std::size_t pick = std::uniform_int_distribution<std::size_t>(0, tops.size())(rng);
                if (pick == tops.size()) {
                    p.below[b] = "#table";
                    tops.push_back(b);
                } else {
                    p.below[b] = tops[pick];
                    tops[pick] = b;
                }
            }
            return p;
        };
        BlocksPayload init = random_config();
        BlocksPayload goal_state = random_config();
        std::set<std::string> goal_preds = blocks::predicates_of(goal_state);
        // goal keeps only the support facts; clear/arm facts are derivable
        std::vector<std::string> goal;
        for (const std::string& p : goal_preds)
            if (p.rfind("on", 0) == 0) goal.push_back(p);
        int dist = blocks::bfs_min_steps(init, {goal.begin(), goal.end()});
        if (dist < min_lo || dist > min_hi) continue;
        std::vector<std::string> init_preds;
        for (const std::string& p : blocks::predicates_of(init)) init_preds.push_back(p);
        all.push_back({{"blocks", names},
                       {"init", init_preds},
                       {"goal", goal},
                       {"min_steps", dist}});
        ++made;
    }
    std::ofstream out(path);
    out << all.dump(1) << '\n';
    std::cout << path << ": " << count << " blocksworld instances\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate benchmark dataset files"};
    std::string out_dir = "data";
    int crosswords_count = 20, blocks_count = 50;
    std::uint64_t seed = 7;
    int min_lo = 2, min_hi = 8;
    bool skip_game24 = false;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--crosswords", crosswords_count, "number of crosswords instances");
    app.add_option("--blocks", blocks_count, "number of blocksworld instances");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--min-steps-lo", min_lo, "blocksworld minimum plan length (low)");
    app.add_option("--min-steps-hi", min_hi, "blocksworld minimum plan length (high)");
    app.add_flag("--skip-game24", skip_game24, "skip the game24 enumeration");
    CLI11_PARSE(app, argc, argv);

    if (!skip_game24) write_game24(out_dir + "/game24.csv");
    write_crosswords(out_dir + "/crosswords_" + std::to_string(crosswords_count) + ".json",
                     crosswords_count, seed);
    write_blocksworld(out_dir + "/blocksworld_" + std::to_string(blocks_count) + ".json",
                      blocks_count, seed, min_lo, min_hi);
    return 0;
}
