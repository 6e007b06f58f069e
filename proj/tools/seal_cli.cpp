#include "seal/harness/dataset.hpp"
#include "seal/harness/experiment.hpp"
#include "seal/harness/report.hpp"
#include "seal/llm/chat_client.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDataset = 3;
constexpr int kExitAdvisor = 4;

int finish_run(const std::vector<seal::RunRecord>& records, const std::string& baseline,
               const std::string& report_csv) {
    seal::harness::Report report = seal::harness::make_report(records, baseline);
    std::cout << report.text();
    if (!report_csv.empty()) {
        std::ofstream out(report_csv);
        out << report.csv();
        std::cout << "report csv written to " << report_csv << "\n";
    }
    bool any_learning = false;
    bool all_unavailable = true;
    for (const seal::RunRecord& r : records) {
        if (r.advisor_id == "none") continue;
        any_learning = true;
        all_unavailable &= r.failure == "advisor_unavailable";
    }
    if (any_learning && all_unavailable) return kExitAdvisor;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Search-via-learning benchmark harness"};
    app.require_subcommand(1);

    std::string config_path, records_path, baseline = "dfs", report_csv;
    std::string dataset_kind, dataset_path, cassette_path;
    std::vector<std::int64_t> budgets;
    bool quiet = false;

    CLI::App* run = app.add_subcommand("run", "Run the experiment matrix from a config file");
    run->add_option("config", config_path, "JSON config path")->required();
    run->add_option("--baseline", baseline, "baseline algorithm for the SS reduction column");
    run->add_option("--report-csv", report_csv, "also write the report as CSV");
    run->add_flag("--quiet", quiet, "suppress per-run progress lines");

    CLI::App* sweep = app.add_subcommand("sweep", "Run a budget sweep from a config file");
    sweep->add_option("config", config_path, "JSON config path")->required();
    sweep->add_option("--budgets", budgets, "override budget list (strictly increasing)");
    sweep->add_option("--baseline", baseline, "baseline algorithm for the SS reduction column");
    sweep->add_option("--report-csv", report_csv, "also write the report as CSV");
    sweep->add_flag("--quiet", quiet, "suppress per-run progress lines");

    CLI::App* report = app.add_subcommand("report", "Aggregate a records file into a table");
    report->add_option("records", records_path, "JSONL records path")->required();
    report->add_option("--baseline", baseline, "baseline algorithm id");
    report->add_option("--csv", report_csv, "also write the report as CSV");

    CLI::App* validate =
        app.add_subcommand("validate-dataset", "Load and validate a dataset file");
    validate->add_option("kind", dataset_kind, "game24 | crosswords | blocksworld")->required();
    validate->add_option("path", dataset_path, "dataset file")->required();

    CLI::App* replay =
        app.add_subcommand("replay", "Run a config offline against a recorded cassette");
    replay->add_option("cassette", cassette_path, "cassette file recorded earlier")->required();
    replay->add_option("--config", config_path, "JSON config path")->required();
    replay->add_option("--baseline", baseline, "baseline algorithm id");
    replay->add_option("--report-csv", report_csv, "also write the report as CSV");
    replay->add_flag("--quiet", quiet, "suppress per-run progress lines");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed() || sweep->parsed() || replay->parsed()) {
            seal::harness::ExperimentConfig config = seal::harness::load_config(config_path);
            if (sweep->parsed()) {
                if (!budgets.empty()) config.budget_sweep = budgets;
                if (config.budget_sweep.empty())
                    config.budget_sweep = {10, 20, 30, 50, 100, 150, 200};
                for (std::size_t i = 1; i < config.budget_sweep.size(); ++i)
                    if (config.budget_sweep[i] <= config.budget_sweep[i - 1])
                        throw seal::harness::ConfigError("budgets must be strictly increasing");
                config.config_hash = seal::harness::hash_config(config);
            }
            if (replay->parsed()) {
                config.advisor.cassette_path = cassette_path;
                config.advisor.cassette_mode = "replay";
                config.config_hash = seal::harness::hash_config(config);
            }
            auto records = seal::harness::run_experiment(config, quiet ? nullptr : &std::cerr);
            return finish_run(records, baseline, report_csv);
        }
        if (report->parsed()) {
            auto records = seal::harness::read_records(records_path);
            if (records.empty()) {
                std::cerr << "no records in " << records_path << "\n";
                return kExitDataset;
            }
            seal::harness::Report rep = seal::harness::make_report(records, baseline);
            std::cout << rep.text();
            if (!report_csv.empty()) {
                std::ofstream out(report_csv);
                out << rep.csv();
            }
            return kExitOk;
        }
        if (validate->parsed()) {
            auto kind = seal::domain_kind_from(dataset_kind);
            if (!kind) {
                std::cerr << "unknown dataset kind: " << dataset_kind << "\n";
                return kExitConfig;
            }
            auto problems = seal::harness::load_dataset(*kind, dataset_path);
            std::cout << "ok: " << problems.size() << " " << dataset_kind << " problems\n";
            return kExitOk;
        }
    } catch (const seal::harness::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const seal::llm::LlmConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const seal::harness::DatasetError& e) {
        std::cerr << "dataset error: " << e.what() << "\n";
        return kExitDataset;
    } catch (const seal::AdvisorUnavailable& e) {
        std::cerr << e.what() << "\n";
        return kExitAdvisor;
    }
    return kExitOk;
}
