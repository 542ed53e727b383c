#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mindflow/dialogue.hpp"

namespace mindflow::gateway {

struct ChatMessage {
    Role role = Role::User;
    std::string content;
    bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
    std::vector<ChatMessage> messages;
    double temperature = 0.0;
    std::size_t max_output_chars = 8192;
    std::string tag; // purpose label: "thought", "response", "judge", ...
};

struct ChatResponse {
    std::string text;
    double latency_ms = 0.0;
    std::string backend_id;
};

// Stable FNV-1a digest over the request messages; keys scripted fixtures.
std::string request_digest(const ChatRequest& request);

class Backend {
public:
    virtual ~Backend() = default;
    virtual ChatResponse complete(const ChatRequest& request) = 0;
    virtual std::string id() const = 0;
};

// Deterministic backend for tests and offline builds. Two exclusive modes:
//  - digest map: responses keyed by request digest, optional default for
//    unmapped requests (without a default, unmapped is FixtureMissing);
//  - replay queue: responses returned in recorded order, ReplayExhausted
//    when the queue runs dry.
class ScriptedBackend : public Backend {
public:
    ScriptedBackend() = default;

    void map_response(const ChatRequest& probe, std::string text);
    void map_digest(std::string digest, std::string text);
    void set_default_response(std::string text);
    void push_replay(ChatResponse response);
    void enable_replay_mode();

    ChatResponse complete(const ChatRequest& request) override;
    std::string id() const override { return replay_mode_ ? "replay" : "scripted"; }

private:
    mutable std::mutex mu_;
    std::map<std::string, std::string> by_digest_;
    std::deque<ChatResponse> replay_;
    std::string default_response_;
    bool has_default_ = false;
    bool replay_mode_ = false;
};

class HttpBackend : public Backend {
public:
    struct Options {
        std::string base_url;  // e.g. http://localhost:8080
        std::string path = "/v1/chat/completions";
        std::string model = "mindflow-sft";
        std::string api_key_env = "MINDFLOW_API_KEY"; // key read from env only
        std::chrono::milliseconds connect_timeout{5000};
        std::chrono::milliseconds read_timeout{30000};
    };

    explicit HttpBackend(Options options);
    ChatResponse complete(const ChatRequest& request) override;
    std::string id() const override { return "http:" + options_.base_url; }

private:
    Options options_;
};

// Appends request/response pairs as JSONL. Responses are logged verbatim;
// auth headers never reach the recorder.
class Recorder {
public:
    explicit Recorder(const std::filesystem::path& path);
    void append(const ChatRequest& request, const ChatResponse& response);

private:
    std::mutex mu_;
    std::ofstream out_;
    std::filesystem::path path_;
};

// Loads a recorded session as a replay-mode scripted backend.
std::shared_ptr<ScriptedBackend> load_replay(const std::filesystem::path& path);

struct RetryPolicy {
    int max_retries = 3;
    std::chrono::milliseconds base_backoff{50}; // doubles per attempt
};

// Shared front door: bounded in-flight requests, retry with exponential
// backoff on transient failures (Timeout, RateLimited, Transport), optional
// recording, client-side max_output_chars truncation.
class Gateway {
public:
    struct Options {
        RetryPolicy retry;
        int max_in_flight = 4;
    };

    explicit Gateway(std::shared_ptr<Backend> backend, Options options = {});

    void set_recorder(std::shared_ptr<Recorder> recorder);
    ChatResponse complete(const ChatRequest& request);
    const Options& options() const { return options_; }
    Backend& backend() { return *backend_; }

private:
    std::shared_ptr<Backend> backend_;
    Options options_;
    std::shared_ptr<Recorder> recorder_;
    std::mutex mu_;
    std::condition_variable slot_free_;
    int in_flight_ = 0;
};

} // namespace mindflow::gateway
