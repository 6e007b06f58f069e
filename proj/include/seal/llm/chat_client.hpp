#pragma once

#include "seal/core.hpp"

#include <memory>
#include <string>
#include <vector>

namespace seal::llm {

struct ChatMessage {
    std::string role;
    std::string content;
};

struct ChatRequest {
    std::string model;
    std::vector<ChatMessage> messages;
    double temperature = 0.7;
    int n = 1;
    int max_tokens = 0; // 0 = provider default
};

struct ChatResponse {
    std::vector<std::string> choices;
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;
    double latency_ms = 0.0;
    int retries = 0; // transport retries spent on this call (not SS-charged)
};

/// A request the endpoint rejected (4xx): configuration problem, fail loudly.
class LlmConfigError : public std::runtime_error {
public:
    explicit LlmConfigError(const std::string& why) : std::runtime_error(why) {}
};

/// OpenAI-compatible chat-completions client with exponential-backoff retries
/// and an optional request-hash -> response cassette for offline replay.
/// Shareable across concurrent runs; a counting semaphore caps in-flight
/// requests.
class ChatClient {
public:
    struct Options {
        std::string endpoint; // base URL or full .../chat/completions URL
        std::string api_key_env = "OPENAI_API_KEY";
        int max_in_flight = 4;
        int max_attempts = 3;
        std::string cassette_path;
        std::string cassette_mode = "off"; // off | record | replay
        bool supports_batch_n = true;      // false: n>1 becomes n sequential calls
        int connect_timeout_s = 10;
        int read_timeout_s = 300;
    };

    explicit ChatClient(Options options);
    ~ChatClient();

    /// Throws AdvisorUnavailable after exhausted retries, LlmConfigError on
    /// 4xx or malformed configuration.
    ChatResponse complete(const ChatRequest& request);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace seal::llm
