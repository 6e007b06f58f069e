#pragma once

#include "seal/harness/config.hpp"

#include <vector>

namespace seal::harness {

struct ReportRow {
    std::string algorithm_id;
    std::string advisor_id;
    std::optional<std::int64_t> budget;
    int runs = 0;
    double pr_pct = 0.0;
    double avg_ss = 0.0;
    double avg_llm = 0.0;
    double avg_ext = 0.0;
    std::optional<double> reduction_pct; // SS reduction vs the baseline row
    // crosswords only
    std::optional<double> letter_pr_pct;
    std::optional<double> word_pr_pct;
    std::optional<double> game_pr_pct;
};

struct Report {
    std::vector<ReportRow> rows;
    std::string baseline_id;
    std::string text() const;
    std::string csv() const;
};

/// Aggregates records into one row per (algorithm, advisor, budget); the SS
/// reduction column compares against `baseline_id` at the same budget (or the
/// baseline's overall average when the budget has no baseline row).
Report make_report(const std::vector<RunRecord>& records, const std::string& baseline_id = "dfs");

} // namespace seal::harness
