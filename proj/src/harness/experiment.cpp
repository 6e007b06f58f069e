#include "seal/harness/experiment.hpp"

#include "seal/harness/dataset.hpp"

#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace seal::harness {
namespace {

using nlohmann::json;

std::string run_key(const std::string& problem_id, const std::string& algorithm_id,
                    const std::optional<std::int64_t>& budget, const std::string& advisor_id) {
    std::string key = problem_id + "|" + algorithm_id + "|" + advisor_id + "|";
    key += budget ? std::to_string(*budget) : "-";
    return key;
}

} // namespace

std::string record_to_line(const RunRecord& r) {
    json j;
    j["problem_id"] = r.problem_id;
    j["algorithm_id"] = r.algorithm_id;
    j["advisor_id"] = r.advisor_id;
    j["solved"] = r.solved;
    if (r.solution) j["solution"] = r.solution->text;
    j["stats"] = {{"llm_answerer", r.stats.llm_answerer_calls},
                  {"llm_validity", r.stats.llm_validity_calls},
                  {"llm_ranking", r.stats.llm_ranking_calls},
                  {"ext_decomposition", r.stats.ext_decomposition_calls},
                  {"ext_verifier", r.stats.ext_verifier_calls},
                  {"ext_traversed", r.stats.ext_traversed_states},
                  {"total_ss", r.stats.total_ss()}};
    j["retries"] = r.retries;
    j["elapsed_ms"] = r.elapsed_ms;
    j["config_hash"] = r.config_hash;
    if (r.budget_max_ss) j["budget"] = *r.budget_max_ss;
    if (!r.failure.empty()) j["failure"] = r.failure;
    if (!r.metrics.empty()) j["metrics"] = r.metrics;
    return j.dump();
}

std::optional<RunRecord> parse_record_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!j.is_object() || !j.contains("problem_id") || !j.contains("algorithm_id"))
        return std::nullopt;
    RunRecord r;
    r.problem_id = j["problem_id"].get<std::string>();
    r.algorithm_id = j["algorithm_id"].get<std::string>();
    if (j.contains("advisor_id")) r.advisor_id = j["advisor_id"].get<std::string>();
    if (j.contains("solved")) r.solved = j["solved"].get<bool>();
    if (j.contains("solution")) {
        Solution sol;
        sol.text = j["solution"].get<std::string>();
        r.solution = sol;
    }
    if (j.contains("stats")) {
        const json& s = j["stats"];
        auto get = [&s](const char* name) -> std::int64_t {
            return s.contains(name) ? s[name].get<std::int64_t>() : 0;
        };
        r.stats.llm_answerer_calls = get("llm_answerer");
        r.stats.llm_validity_calls = get("llm_validity");
        r.stats.llm_ranking_calls = get("llm_ranking");
        r.stats.ext_decomposition_calls = get("ext_decomposition");
        r.stats.ext_verifier_calls = get("ext_verifier");
        r.stats.ext_traversed_states = get("ext_traversed");
    }
    if (j.contains("retries")) r.retries = j["retries"].get<std::int64_t>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j["elapsed_ms"].get<double>();
    if (j.contains("config_hash")) r.config_hash = j["config_hash"].get<std::string>();
    if (j.contains("budget")) r.budget_max_ss = j["budget"].get<std::int64_t>();
    if (j.contains("failure")) r.failure = j["failure"].get<std::string>();
    if (j.contains("metrics"))
        for (const auto& [k, v] : j["metrics"].items()) r.metrics[k] = v.get<double>();
    return r;
}

std::vector<RunRecord> read_records(const std::string& path) {
    std::vector<RunRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (auto r = parse_record_line(line)) out.push_back(std::move(*r));
    }
    return out;
}

std::vector<PlanningProblem> load_problems(const ExperimentConfig& config) {
    std::vector<PlanningProblem> problems;
    for (const DatasetRef& ref : config.datasets) {
        auto batch = load_dataset(ref);
        for (auto& p : batch) problems.push_back(std::move(p));
    }
    if (config.min_steps_range) {
        std::vector<PlanningProblem> kept;
        for (auto& p : problems) {
            if (p.kind == DomainKind::blocksworld) {
                int steps = p.blocks().min_steps;
                if (steps < config.min_steps_range->first ||
                    steps > config.min_steps_range->second)
                    continue;
            }
            kept.push_back(std::move(p));
        }
        problems = std::move(kept);
    }
    if (config.difficulty_level) {
        auto buckets = bucket_difficulty(problems);
        std::vector<PlanningProblem> kept;
        for (std::size_t idx : buckets[static_cast<std::size_t>(*config.difficulty_level - 1)])
            kept.push_back(problems[idx]);
        problems = std::move(kept);
    }
    return problems;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config, std::ostream* progress) {
    std::vector<PlanningProblem> problems = load_problems(config);
    std::shared_ptr<Advisor> advisor = make_advisor(config.advisor);

    std::vector<RunRecord> existing = read_records(config.output_path);
    std::set<std::string> done;
    for (const RunRecord& r : existing)
        done.insert(run_key(r.problem_id, r.algorithm_id, r.budget_max_ss, r.advisor_id));

    std::vector<std::optional<std::int64_t>> budgets;
    if (config.budget_sweep.empty())
        budgets.push_back(config.budget.max_ss);
    else
        for (auto b : config.budget_sweep) budgets.push_back(b);

    struct Task {
        const PlanningProblem* problem;
        AlgorithmConfig algorithm;
        std::optional<std::int64_t> budget;
    };
    std::vector<Task> tasks;
    for (const auto& budget : budgets)
        for (const PlanningProblem& p : problems)
            for (const AlgorithmConfig& a : config.algorithms) {
                std::string advisor_id = is_traditional(a.id) ? "none" : advisor->id();
                if (done.count(run_key(p.problem_id, a.id_string(), budget, advisor_id)))
                    continue;
                tasks.push_back({&p, a, budget});
            }

    std::filesystem::path out_path(config.output_path);
    if (out_path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(out_path.parent_path(), ec);
    }
    std::ofstream out(config.output_path, std::ios::app);
    if (!out) throw ConfigError("cannot open output for append: " + config.output_path);

    std::mutex sink_mu;
    std::vector<RunRecord> fresh;
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            RunOptions opts;
            opts.algorithm = t.algorithm;
            opts.budget.max_ss = t.budget;
            opts.budget.deadline = config.budget.deadline;
            // remote advisors can stall; oracle advisors cannot
            if (!opts.budget.deadline && config.advisor.kind == "llm")
                opts.budget.deadline = std::chrono::minutes(10);
            opts.record_trace = config.record_trace;
            opts.config_hash = config.config_hash;
            RunRecord record = run_algorithm(*t.problem, *advisor, opts);
            std::lock_guard lock(sink_mu);
            out << record_to_line(record) << '\n';
            out.flush();
            if (progress)
                (*progress) << record.problem_id << ' ' << record.algorithm_id << ' '
                            << (record.solved ? "solved" : "unsolved") << " ss="
                            << record.stats.total_ss() << '\n';
            fresh.push_back(std::move(record));
        }
    };

    int workers = std::max(1, config.workers);
    if (workers == 1 || tasks.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    std::vector<RunRecord> all = std::move(existing);
    for (auto& r : fresh) all.push_back(std::move(r));
    return all;
}

} // namespace seal::harness
