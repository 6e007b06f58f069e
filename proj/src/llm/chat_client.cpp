#include "seal/llm/chat_client.hpp"

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <thread>

namespace seal::llm {
namespace {

using nlohmann::json;

std::uint64_t fnv1a(const std::string& text) {
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

struct Url {
    bool https = false;
    std::string host;
    int port = 0;
    std::string path;
};

Url parse_url(const std::string& url) {
    Url out;
    std::string rest = url;
    if (rest.rfind("https://", 0) == 0) {
        out.https = true;
        rest = rest.substr(8);
    } else if (rest.rfind("http://", 0) == 0) {
        rest = rest.substr(7);
    } else {
        throw LlmConfigError("endpoint must start with http:// or https://: " + url);
    }
    std::size_t slash = rest.find('/');
    std::string hostport = slash == std::string::npos ? rest : rest.substr(0, slash);
    out.path = slash == std::string::npos ? "" : rest.substr(slash);
    std::size_t colon = hostport.find(':');
    if (colon == std::string::npos) {
        out.host = hostport;
        out.port = out.https ? 443 : 80;
    } else {
        out.host = hostport.substr(0, colon);
        out.port = std::stoi(hostport.substr(colon + 1));
    }
    if (out.host.empty()) throw LlmConfigError("endpoint has no host: " + url);
    // Accept either a base URL or the full chat-completions route.
    if (out.path.empty()) out.path = "/v1/chat/completions";
    if (out.path.find("chat/completions") == std::string::npos) {
        if (out.path.back() == '/') out.path.pop_back();
        out.path += "/chat/completions";
    }
    return out;
}

class Gate {
public:
    explicit Gate(int slots) : slots_(slots < 1 ? 1 : slots) {}
    void acquire() {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [this] { return slots_ > 0; });
        --slots_;
    }
    void release() {
        {
            std::lock_guard lock(mu_);
            ++slots_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    int slots_;
};

json request_body(const ChatRequest& request, int n) {
    json body;
    body["model"] = request.model;
    body["temperature"] = request.temperature;
    body["n"] = n;
    if (request.max_tokens > 0) body["max_tokens"] = request.max_tokens;
    json messages = json::array();
    for (const ChatMessage& m : request.messages)
        messages.push_back({{"role", m.role}, {"content", m.content}});
    body["messages"] = messages;
    return body;
}

} // namespace

struct ChatClient::Impl {
    Options options;
    Url url;
    std::string api_key;
    Gate gate;

    std::mutex cassette_mu;
    json cassette = json::object();
    bool cassette_dirty = false;

    explicit Impl(Options opts)
        : options(std::move(opts)),
          url(options.cassette_mode == "replay" ? Url{} : parse_url(options.endpoint)),
          gate(options.max_in_flight) {
        if (options.cassette_mode != "off" && options.cassette_mode != "record" &&
            options.cassette_mode != "replay")
            throw LlmConfigError("cassette_mode must be off, record or replay");
        if (options.cassette_mode != "off") {
            if (options.cassette_path.empty())
                throw LlmConfigError("cassette mode set but cassette_path is empty");
            std::ifstream in(options.cassette_path);
            if (in) {
                try {
                    in >> cassette;
                } catch (const json::exception& e) {
                    throw LlmConfigError("unreadable cassette file: " + std::string(e.what()));
                }
            } else if (options.cassette_mode == "replay") {
                throw LlmConfigError("cassette file not found: " + options.cassette_path);
            }
        }
        if (const char* key = std::getenv(options.api_key_env.c_str())) api_key = key;
    }

    void persist_cassette() {
        if (!cassette_dirty) return;
        std::ofstream out(options.cassette_path);
        out << cassette.dump(1) << '\n';
        cassette_dirty = false;
    }

    // One POST with retries; returns the parsed body.
    json post_once(const json& body, int& retries) {
        std::string payload = body.dump();
        std::string key = hex64(fnv1a(payload));

        if (options.cassette_mode == "replay") {
            std::lock_guard lock(cassette_mu);
            if (!cassette.contains(key))
                throw AdvisorUnavailable("cassette miss for request " + key);
            return cassette[key];
        }
        if (options.cassette_mode == "record") {
            std::lock_guard lock(cassette_mu);
            if (cassette.contains(key)) return cassette[key];
        }

        gate.acquire();
        struct Release {
            Gate& g;
            ~Release() { g.release(); }
        } release{gate};

        std::string last_error;
        for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
            if (attempt > 0) {
                ++retries;
                std::this_thread::sleep_for(std::chrono::milliseconds(250 << (attempt - 1)));
            }
            httplib::Result res;
            httplib::Headers headers;
            if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
            if (url.https) {
                httplib::SSLClient cli(url.host, url.port);
                cli.set_connection_timeout(options.connect_timeout_s);
                cli.set_read_timeout(options.read_timeout_s);
                res = cli.Post(url.path, headers, payload, "application/json");
            } else
#endif
            {
                if (url.https) throw LlmConfigError("built without TLS support");
                httplib::Client cli(url.host, url.port);
                cli.set_connection_timeout(options.connect_timeout_s);
                cli.set_read_timeout(options.read_timeout_s);
                res = cli.Post(url.path, headers, payload, "application/json");
            }
            if (!res) {
                last_error = "transport: " + httplib::to_string(res.error());
                continue;
            }
            if (res->status >= 500) {
                last_error = "server " + std::to_string(res->status);
                continue;
            }
            if (res->status >= 400)
                throw LlmConfigError("endpoint rejected request (" +
                                     std::to_string(res->status) + "): " + res->body);
            json parsed;
            try {
                parsed = json::parse(res->body);
            } catch (const json::exception&) {
                last_error = "unparseable response body";
                continue;
            }
            if (options.cassette_mode == "record") {
                std::lock_guard lock(cassette_mu);
                cassette[key] = parsed;
                cassette_dirty = true;
                persist_cassette();
            }
            return parsed;
        }
        throw AdvisorUnavailable(last_error.empty() ? "no attempts made" : last_error);
    }
};

ChatClient::ChatClient(Options options) : impl_(std::make_unique<Impl>(std::move(options))) {}

ChatClient::~ChatClient() = default;

ChatResponse ChatClient::complete(const ChatRequest& request) {
    auto started = std::chrono::steady_clock::now();
    ChatResponse out;
    int want = request.n < 1 ? 1 : request.n;

    std::vector<json> bodies;
    if (impl_->options.supports_batch_n || want == 1) {
        bodies.push_back(request_body(request, want));
    } else {
        for (int i = 0; i < want; ++i) bodies.push_back(request_body(request, 1));
    }

    for (const json& body : bodies) {
        int retries = 0;
        json reply = impl_->post_once(body, retries);
        out.retries += retries;
        if (!reply.contains("choices") || !reply["choices"].is_array())
            throw AdvisorUnavailable("response without choices array");
        for (const json& choice : reply["choices"]) {
            if (choice.contains("message") && choice["message"].contains("content") &&
                choice["message"]["content"].is_string())
                out.choices.push_back(choice["message"]["content"].get<std::string>());
            else if (choice.contains("text") && choice["text"].is_string())
                out.choices.push_back(choice["text"].get<std::string>());
            else
                out.choices.emplace_back();
        }
        if (reply.contains("usage")) {
            const json& u = reply["usage"];
            if (u.contains("prompt_tokens") && u["prompt_tokens"].is_number())
                out.prompt_tokens += u["prompt_tokens"].get<std::int64_t>();
            if (u.contains("completion_tokens") && u["completion_tokens"].is_number())
                out.completion_tokens += u["completion_tokens"].get<std::int64_t>();
        }
    }
    if (static_cast<int>(out.choices.size()) > want) out.choices.resize(static_cast<std::size_t>(want));
    if (static_cast<int>(out.choices.size()) < want)
        throw AdvisorUnavailable("fewer choices than requested");
    out.latency_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               started)
                         .count();
    return out;
}

} // namespace seal::llm
