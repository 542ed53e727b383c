#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mindflow::cli {

// Exit codes: 0 ok, 1 generic failure, 2 schema violation, 3 io failure,
// 4 degenerate metric input, 5 unjudged message, 64 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitMetric = 4;
inline constexpr int kExitUnjudged = 5;
inline constexpr int kExitUsage = 64;

// Runtime configuration; JSON config file values are overridden by flags.
// The API key is env-only and never appears here.
struct RunConfig {
    std::string backend = "scripted"; // scripted | http
    std::string base_url;
    std::string http_path = "/v1/chat/completions";
    std::string model = "mindflow-sft";
    std::string api_key_env = "MINDFLOW_API_KEY";
    std::string ordering = "sra";
    std::size_t max_iters = 8;
    std::size_t knowledge_k = 3;
    std::size_t knowledge_budget = 2000;
    int retries = 3;
    int parallelism = 4;
    std::uint64_t seed = 0;
    double temperature = 0.0;
    bool strict_tools = false;
    std::string catalog_path;
    std::string kb_path;
    std::string prompts_dir;
    std::string replay_path;     // scripted backend replays this session
    std::string record_path;     // live sessions are recorded here
    std::string scripted_default; // default reply for unmapped scripted requests
};

// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args);

} // namespace mindflow::cli
