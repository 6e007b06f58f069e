#include "seal/llm/parsers.hpp"

#include "seal/domain.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace seal::llm {
namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Strips leading/trailing markdown emphasis and list markers.
std::string strip_markdown(std::string s) {
    s = trim(s);
    while (!s.empty() && (s.front() == '*' || s.front() == '#' || s.front() == '-' ||
                          s.front() == '>' || s.front() == '`'))
        s.erase(s.begin());
    while (!s.empty() && (s.back() == '*' || s.back() == '`'))
        s.pop_back();
    return trim(s);
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(line);
    }
    return out;
}

// Position just past "marker" + optional spaces + ':' on the line, or npos.
std::size_t after_marker(const std::string& line, const std::string& marker) {
    std::string low = lower(line);
    std::size_t at = low.rfind(marker);
    while (at != std::string::npos) {
        std::size_t p = at + marker.size();
        while (p < line.size() && (line[p] == ' ' || line[p] == '*')) ++p;
        if (p < line.size() && line[p] == ':') return p + 1;
        at = at == 0 ? std::string::npos : low.rfind(marker, at - 1);
    }
    return std::string::npos;
}

std::optional<std::string> answer_line_payload(const std::string& text,
                                               const std::string& marker) {
    auto lines = lines_of(text);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::size_t p = after_marker(strip_markdown(*it), marker);
        if (p == std::string::npos) continue;
        std::string payload = strip_markdown(strip_markdown(*it).substr(p));
        if (!payload.empty()) return payload;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> parse_answer(DomainKind kind, const std::string& text) {
    if (kind == DomainKind::game24) {
        return answer_line_payload(text, "answer");
    }
    if (kind == DomainKind::crosswords) {
        auto lines = lines_of(text);
        int marker = -1;
        for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
            std::string low = lower(strip_markdown(lines[static_cast<std::size_t>(i)]));
            if (low == "output:" || low.rfind("output:", 0) == 0) marker = i;
        }
        if (marker < 0) return std::nullopt;
        std::vector<std::string> rows;
        for (std::size_t i = static_cast<std::size_t>(marker) + 1;
             i < lines.size() && rows.size() < 5; ++i) {
            std::string letters;
            bool junk = false;
            for (char c : lines[i]) {
                if (std::isalpha(static_cast<unsigned char>(c)))
                    letters += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
                else if (!std::isspace(static_cast<unsigned char>(c)))
                    junk = true;
            }
            if (letters.empty()) continue;
            if (junk || letters.size() != 5) return std::nullopt;
            std::string spaced;
            for (std::size_t k = 0; k < 5; ++k) {
                if (k) spaced += ' ';
                spaced += letters[k];
            }
            rows.push_back(spaced);
        }
        if (rows.size() != 5) return std::nullopt;
        std::string out;
        for (std::size_t r = 0; r < 5; ++r) {
            if (r) out += '\n';
            out += rows[r];
        }
        return out;
    }
    // Blocksworld: keep every line that parses as an action.
    const Domain& dom = domain_for(DomainKind::blocksworld);
    std::string out;
    for (const std::string& line : lines_of(text)) {
        std::string body = strip_markdown(line);
        // tolerate "1. pickup a" style numbering
        std::size_t p = 0;
        while (p < body.size() && (std::isdigit(static_cast<unsigned char>(body[p])) ||
                                   body[p] == '.' || body[p] == ')' || body[p] == ' '))
            ++p;
        std::string tail = body.substr(p);
        const std::string& candidate = dom.parse_action(tail) ? tail : body;
        if (auto action = dom.parse_action(candidate)) {
            if (!out.empty()) out += '\n';
            out += action->label;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

std::optional<ValidityParse> parse_validity(const std::string& text) {
    auto lines = lines_of(text);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::string line = strip_markdown(*it);
        std::size_t p = after_marker(line, "answer");
        if (p == std::string::npos) continue;
        std::string rest = lower(line.substr(p));
        std::size_t q = rest.find_first_not_of(" \t");
        if (q == std::string::npos) continue;
        ValidityParse out;
        if (rest.compare(q, 3, "yes") == 0)
            out.yes = true;
        else if (rest.compare(q, 2, "no") == 0)
            out.yes = false;
        else
            continue;
        std::size_t at = 0;
        while ((at = rest.find("state", at)) != std::string::npos) {
            at += 5;
            while (at < rest.size() && (rest[at] == ' ' || rest[at] == '#')) ++at;
            std::size_t end = at;
            while (end < rest.size() && std::isdigit(static_cast<unsigned char>(rest[end])))
                ++end;
            if (end > at) out.states.insert(std::stoi(rest.substr(at, end - at)));
            at = end;
        }
        return out;
    }
    return std::nullopt;
}

std::optional<ValueBucket> parse_value(const std::string& text) {
    auto lines = lines_of(text);
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::string line = strip_markdown(*it);
        std::size_t p = after_marker(line, "conclusion");
        if (p == std::string::npos) continue;
        std::string rest = lower(line.substr(p));
        // earliest keyword on the line wins ("impossible" before its "possible"
        // substring, "unsure" must not read as sure)
        struct Hit {
            std::size_t at;
            ValueBucket bucket;
        };
        std::vector<Hit> hits;
        auto add = [&](const std::string& kw, ValueBucket b) {
            std::size_t at = rest.find(kw);
            if (at == std::string::npos) return;
            if (kw == "sure" && at > 0 &&
                std::isalpha(static_cast<unsigned char>(rest[at - 1])))
                return; // "unsure", "ensure"
            hits.push_back({at, b});
        };
        add("impossible", ValueBucket::impossible);
        add("sure", ValueBucket::sure);
        add("likely", ValueBucket::likely);
        add("maybe", ValueBucket::likely);
        if (hits.empty()) continue;
        auto best = std::min_element(hits.begin(), hits.end(),
                                     [](const Hit& a, const Hit& b) { return a.at < b.at; });
        return best->bucket;
    }
    return std::nullopt;
}

double bucket_score(ValueBucket bucket) {
    switch (bucket) {
    case ValueBucket::sure: return 1.0;
    case ValueBucket::likely: return 0.5;
    case ValueBucket::impossible: return 0.1;
    }
    return 0.5;
}

std::optional<std::string> extract_solution_tag(const std::string& text) {
    std::string low = lower(text);
    const std::string open = "<solution>", close = "</solution>";
    std::size_t best = std::string::npos;
    std::size_t at = 0;
    while ((at = low.find(open, at)) != std::string::npos) {
        best = at;
        at += open.size();
    }
    if (best == std::string::npos) return std::nullopt;
    std::size_t start = best + open.size();
    std::size_t end = low.find(close, start);
    std::string content =
        end == std::string::npos ? text.substr(start) : text.substr(start, end - start);
    content = trim(content);
    if (content.empty()) return std::nullopt;
    return content;
}

} // namespace seal::llm
