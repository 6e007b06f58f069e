#include "seal/harness/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace seal::harness {
namespace {

std::string fmt(double v, int prec = 1) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(prec) << v;
    return os.str();
}

std::string budget_text(const std::optional<std::int64_t>& b) {
    return b ? std::to_string(*b) : "-";
}

} // namespace

Report make_report(const std::vector<RunRecord>& records, const std::string& baseline_id) {
    struct Acc {
        int runs = 0;
        int solved = 0;
        double ss = 0, llm = 0, ext = 0;
        double letter = 0, word = 0, game = 0;
        int metric_runs = 0;
        std::size_t first_seen = 0;
    };
    std::map<std::string, Acc> groups;
    std::map<std::string, ReportRow> keys;
    std::size_t seen = 0;
    for (const RunRecord& r : records) {
        std::string key = r.algorithm_id + "|" + r.advisor_id + "|" + budget_text(r.budget_max_ss);
        Acc& acc = groups[key];
        if (acc.runs == 0) {
            acc.first_seen = seen;
            ReportRow row;
            row.algorithm_id = r.algorithm_id;
            row.advisor_id = r.advisor_id;
            row.budget = r.budget_max_ss;
            keys[key] = row;
        }
        ++seen;
        ++acc.runs;
        acc.solved += r.solved;
        acc.ss += static_cast<double>(r.stats.total_ss());
        acc.llm += static_cast<double>(r.stats.llm_total());
        acc.ext += static_cast<double>(r.stats.ext_total());
        if (r.metrics.count("letter_pr")) {
            acc.letter += r.metrics.at("letter_pr");
            acc.word += r.metrics.at("word_pr");
            acc.game += r.metrics.at("game_pr");
            ++acc.metric_runs;
        }
    }

    // baseline average SS per budget, plus an overall fallback
    std::map<std::string, double> baseline_ss;
    double baseline_overall = 0;
    int baseline_runs = 0;
    for (const auto& [key, acc] : groups) {
        const ReportRow& row = keys.at(key);
        if (row.algorithm_id != baseline_id) continue;
        baseline_ss[budget_text(row.budget)] = acc.ss / acc.runs;
        baseline_overall += acc.ss;
        baseline_runs += acc.runs;
    }

    Report report;
    report.baseline_id = baseline_id;
    std::vector<std::pair<std::size_t, std::string>> order;
    for (const auto& [key, acc] : groups) order.emplace_back(acc.first_seen, key);
    std::sort(order.begin(), order.end());
    for (const auto& [_, key] : order) {
        const Acc& acc = groups.at(key);
        ReportRow row = keys.at(key);
        row.runs = acc.runs;
        row.pr_pct = acc.runs ? 100.0 * acc.solved / acc.runs : 0.0;
        row.avg_ss = acc.runs ? acc.ss / acc.runs : 0.0;
        row.avg_llm = acc.runs ? acc.llm / acc.runs : 0.0;
        row.avg_ext = acc.runs ? acc.ext / acc.runs : 0.0;
        if (acc.metric_runs > 0) {
            row.letter_pr_pct = 100.0 * acc.letter / acc.metric_runs;
            row.word_pr_pct = 100.0 * acc.word / acc.metric_runs;
            row.game_pr_pct = 100.0 * acc.game / acc.metric_runs;
        }
        double base = 0;
        bool have_base = false;
        if (auto it = baseline_ss.find(budget_text(row.budget)); it != baseline_ss.end()) {
            base = it->second;
            have_base = true;
        } else if (baseline_runs > 0) {
            base = baseline_overall / baseline_runs;
            have_base = true;
        }
        if (have_base && base > 0) row.reduction_pct = (1.0 - row.avg_ss / base) * 100.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string Report::text() const {
    std::ostringstream os;
    bool crosswords = false;
    for (const ReportRow& r : rows) crosswords |= r.letter_pr_pct.has_value();
    os << std::left << std::setw(16) << "algorithm" << std::setw(26) << "advisor" << std::setw(8)
       << "budget" << std::setw(6) << "runs" << std::setw(8) << "PR%";
    if (crosswords)
        os << std::setw(10) << "letter%" << std::setw(8) << "word%" << std::setw(8) << "game%";
    os << std::setw(10) << "avg SS" << std::setw(10) << "avg LLM" << std::setw(10) << "avg Ext"
       << std::setw(14) << ("vs " + baseline_id) << '\n';
    for (const ReportRow& r : rows) {
        os << std::left << std::setw(16) << r.algorithm_id << std::setw(26) << r.advisor_id
           << std::setw(8) << budget_text(r.budget) << std::setw(6) << r.runs << std::setw(8)
           << fmt(r.pr_pct);
        if (crosswords)
            os << std::setw(10) << (r.letter_pr_pct ? fmt(*r.letter_pr_pct) : "-") << std::setw(8)
               << (r.word_pr_pct ? fmt(*r.word_pr_pct) : "-") << std::setw(8)
               << (r.game_pr_pct ? fmt(*r.game_pr_pct) : "-");
        os << std::setw(10) << fmt(r.avg_ss) << std::setw(10) << fmt(r.avg_llm) << std::setw(10)
           << fmt(r.avg_ext) << std::setw(14)
           << (r.reduction_pct ? ("down " + fmt(*r.reduction_pct) + "%") : "-") << '\n';
    }
    return os.str();
}

std::string Report::csv() const {
    std::ostringstream os;
    os << "algorithm_id,advisor_id,budget,runs,pr_pct,letter_pr_pct,word_pr_pct,game_pr_pct,"
          "avg_ss,avg_llm_calls,avg_ext_calls,ss_reduction_pct_vs_"
       << baseline_id << '\n';
    for (const ReportRow& r : rows) {
        os << r.algorithm_id << ',' << r.advisor_id << ',' << budget_text(r.budget) << ','
           << r.runs << ',' << fmt(r.pr_pct, 2) << ','
           << (r.letter_pr_pct ? fmt(*r.letter_pr_pct, 2) : "") << ','
           << (r.word_pr_pct ? fmt(*r.word_pr_pct, 2) : "") << ','
           << (r.game_pr_pct ? fmt(*r.game_pr_pct, 2) : "") << ',' << fmt(r.avg_ss, 2) << ','
           << fmt(r.avg_llm, 2) << ',' << fmt(r.avg_ext, 2) << ','
           << (r.reduction_pct ? fmt(*r.reduction_pct, 2) : "") << '\n';
    }
    return os.str();
}

} // namespace seal::harness
