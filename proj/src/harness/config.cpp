#include "seal/harness/config.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace seal::harness {
namespace {

using nlohmann::json;

void interpolate_env(json& node) {
    if (node.is_object() || node.is_array()) {
        for (auto& child : node) interpolate_env(child);
        return;
    }
    if (!node.is_string()) return;
    std::string s = node.get<std::string>();
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '$' && i + 1 < s.size() && s[i + 1] == '{') {
            std::size_t end = s.find('}', i + 2);
            if (end != std::string::npos) {
                std::string name = s.substr(i + 2, end - i - 2);
                const char* value = std::getenv(name.c_str());
                if (!value)
                    throw ConfigError("environment variable not set: " + name);
                out += value;
                i = end + 1;
                continue;
            }
        }
        out += s[i++];
    }
    node = out;
}

AlgorithmConfig parse_algorithm(const json& node) {
    AlgorithmConfig cfg;
    if (node.is_string()) {
        auto parsed = AlgorithmConfig::parse(node.get<std::string>());
        if (!parsed) throw ConfigError("unknown algorithm: " + node.get<std::string>());
        return *parsed;
    }
    if (!node.is_object() || !node.contains("id"))
        throw ConfigError("algorithm entries must be a name or an object with \"id\"");
    auto parsed = AlgorithmConfig::parse(node["id"].get<std::string>());
    if (!parsed) throw ConfigError("unknown algorithm: " + node["id"].get<std::string>());
    cfg = *parsed;
    if (node.contains("n_samples")) cfg.n_samples = node["n_samples"].get<int>();
    if (node.contains("beam_width")) cfg.beam_width = node["beam_width"].get<int>();
    if (node.contains("eval_samples")) cfg.eval_samples = node["eval_samples"].get<int>();
    if (node.contains("ablation_flags")) {
        for (const auto& f : node["ablation_flags"]) {
            std::string flag = f.get<std::string>();
            if (flag != "no_validity" && flag != "no_direct_solve" && flag != "no_ranking" &&
                flag != "no_verifier")
                throw ConfigError("unknown ablation flag: " + flag);
            cfg.ablation_flags.insert(flag);
        }
        if (!cfg.ablation_flags.empty() && cfg.id != AlgorithmId::seal &&
            cfg.id != AlgorithmId::seal_c)
            throw ConfigError("ablation_flags are only valid for seal/seal_c");
    }
    return cfg;
}

AdvisorSpec parse_advisor(const json& node) {
    AdvisorSpec spec;
    if (node.is_string()) {
        spec.kind = node.get<std::string>();
        return spec;
    }
    if (!node.is_object()) throw ConfigError("advisor must be a name or an object");
    if (node.contains("kind")) spec.kind = node["kind"].get<std::string>();
    if (node.contains("model")) spec.model = node["model"].get<std::string>();
    if (node.contains("endpoint")) spec.endpoint = node["endpoint"].get<std::string>();
    if (node.contains("temperature")) spec.temperature = node["temperature"].get<double>();
    if (node.contains("api_key_env")) spec.api_key_env = node["api_key_env"].get<std::string>();
    if (node.contains("max_in_flight")) spec.max_in_flight = node["max_in_flight"].get<int>();
    if (node.contains("max_tokens")) spec.max_tokens = node["max_tokens"].get<int>();
    if (node.contains("cassette_path")) spec.cassette_path = node["cassette_path"].get<std::string>();
    if (node.contains("cassette_mode")) spec.cassette_mode = node["cassette_mode"].get<std::string>();
    if (node.contains("validity_votes")) spec.validity_votes = node["validity_votes"].get<int>();
    if (node.contains("seed")) spec.seed = node["seed"].get<std::uint64_t>();
    if (node.contains("error_rate")) spec.error_rate = node["error_rate"].get<double>();
    return spec;
}

} // namespace

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

ExperimentConfig parse_config_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    interpolate_env(doc);

    ExperimentConfig cfg;
    if (!doc.contains("datasets") || !doc["datasets"].is_array() || doc["datasets"].empty())
        throw ConfigError("config needs a non-empty \"datasets\" array");
    for (const auto& d : doc["datasets"]) {
        DatasetRef ref;
        if (!d.contains("kind") || !d.contains("path"))
            throw ConfigError("each dataset needs \"kind\" and \"path\"");
        auto kind = domain_kind_from(d["kind"].get<std::string>());
        if (!kind) throw ConfigError("unknown dataset kind: " + d["kind"].get<std::string>());
        ref.kind = *kind;
        ref.path = d["path"].get<std::string>();
        if (d.contains("index_range")) {
            if (!d["index_range"].is_array() || d["index_range"].size() != 2)
                throw ConfigError("index_range must be [lo, hi]");
            ref.index_lo = d["index_range"][0].get<int>();
            ref.index_hi = d["index_range"][1].get<int>();
        }
        cfg.datasets.push_back(ref);
    }

    if (!doc.contains("algorithms") || !doc["algorithms"].is_array() ||
        doc["algorithms"].empty())
        throw ConfigError("config needs a non-empty \"algorithms\" array");
    for (const auto& a : doc["algorithms"]) cfg.algorithms.push_back(parse_algorithm(a));

    cfg.advisor = doc.contains("advisor") ? parse_advisor(doc["advisor"]) : AdvisorSpec{};

    if (doc.contains("budget")) {
        const auto& b = doc["budget"];
        if (b.contains("max_ss")) cfg.budget.max_ss = b["max_ss"].get<std::int64_t>();
        if (b.contains("deadline_ms"))
            cfg.budget.deadline = std::chrono::milliseconds(b["deadline_ms"].get<std::int64_t>());
    }
    if (doc.contains("budget_sweep")) {
        for (const auto& b : doc["budget_sweep"])
            cfg.budget_sweep.push_back(b.get<std::int64_t>());
        for (std::size_t i = 1; i < cfg.budget_sweep.size(); ++i)
            if (cfg.budget_sweep[i] <= cfg.budget_sweep[i - 1])
                throw ConfigError("budget_sweep values must be strictly increasing");
    }
    if (doc.contains("difficulty_level")) {
        int level = doc["difficulty_level"].get<int>();
        if (level < 1 || level > 3) throw ConfigError("difficulty_level must be 1..3");
        cfg.difficulty_level = level;
    }
    if (doc.contains("min_steps_range")) {
        const auto& r = doc["min_steps_range"];
        if (!r.is_array() || r.size() != 2) throw ConfigError("min_steps_range must be [lo, hi]");
        cfg.min_steps_range = {r[0].get<int>(), r[1].get<int>()};
    }
    if (doc.contains("output")) cfg.output_path = doc["output"].get<std::string>();
    if (doc.contains("workers")) cfg.workers = std::max(1, doc["workers"].get<int>());
    if (doc.contains("record_trace")) cfg.record_trace = doc["record_trace"].get<bool>();

    cfg.config_hash = hash_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string hash_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    for (const auto& d : cfg.datasets) {
        os << to_string(d.kind) << '|' << d.path << '|';
        if (d.index_lo) os << *d.index_lo;
        os << ':';
        if (d.index_hi) os << *d.index_hi;
        os << ';';
    }
    for (const auto& a : cfg.algorithms)
        os << a.id_string() << ',' << a.n_samples << ',' << a.beam_width << ',' << a.eval_samples
           << ';';
    const AdvisorSpec& adv = cfg.advisor;
    os << adv.kind << '|' << adv.model << '|' << adv.endpoint << '|' << adv.temperature << '|'
       << adv.seed << '|' << adv.error_rate << '|' << adv.validity_votes << '|'
       << adv.cassette_mode << ';';
    if (cfg.budget.max_ss) os << "ss=" << *cfg.budget.max_ss;
    if (cfg.budget.deadline) os << "dl=" << cfg.budget.deadline->count();
    for (auto b : cfg.budget_sweep) os << ',' << b;
    if (cfg.difficulty_level) os << "lvl=" << *cfg.difficulty_level;
    if (cfg.min_steps_range)
        os << "steps=" << cfg.min_steps_range->first << '-' << cfg.min_steps_range->second;
    return hex64(fnv1a64(os.str()));
}

} // namespace seal::harness
