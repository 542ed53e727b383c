#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindflow/corpus.hpp"
#include "mindflow/dialogue.hpp"
#include "mindflow/gateway.hpp"
#include "mindflow/prompts.hpp"
#include "mindflow/tools.hpp"

namespace mindflow::agent {

enum class Termination { Finish, RepeatedAction, MaxIterations, ModelError };

std::string_view termination_name(Termination t);
Termination termination_from_name(std::string_view name);

struct Round {
    std::string thought;
    ToolCall action;
    std::string observation;

    bool operator==(const Round&) const = default;
};

struct LoopTranscript {
    std::vector<Round> rounds; // executed rounds only, in order
    std::string final_response;
    Termination termination = Termination::Finish;
};

struct LoopOptions {
    std::size_t max_iters = 8;
    // Lenient (default): tool errors become the observation text so batch
    // data generation keeps going. Strict: they propagate.
    bool strict_tools = false;
    PromptSet prompts;

    LoopOptions() : prompts(default_prompts()) {}
};

std::string generate_thought(gateway::Gateway& gw, std::string_view query,
                             const Dialogue& history, std::string_view observation,
                             const ToolRegistry& registry, const PromptSet& prompts);

// Parses the first action block in the thought. The name "finish" is a
// reserved action that terminates the loop. Throws MalformedAction.
ToolCall extract_action(std::string_view thought);

// Free-function dispatch per the loop contract. strict=true propagates
// UnknownTool/ToolFailure; strict=false renders them into the observation.
std::string execute(const ToolCall& action, const ToolRegistry& registry,
                    bool strict = true);

std::string generate_response(gateway::Gateway& gw, std::string_view query,
                              const Dialogue& history, std::string_view observation,
                              const PromptSet& prompts);

// The tool-augmented reasoning loop. Each iteration: thought -> action ->
// observation. Breaks on a finish action, on an action equal (name and
// canonical arguments) to the previously executed one, or at max_iters.
// A thought with no parseable action block consumes an iteration without
// executing anything. generate_response runs exactly once with the last
// obtained observation; backend failures terminate as ModelError with the
// fallback template as the final response.
LoopTranscript run_loop(std::string_view query, const Dialogue& history,
                        const ToolRegistry& registry, gateway::Gateway& gw,
                        const LoopOptions& options = {});

// Converts executed rounds into the trace field consumed by the corpus
// builders. Throws UnusableTranscript for ModelError transcripts.
corpus::RawRecord transcript_to_record(const LoopTranscript& transcript,
                                       std::string_view query,
                                       std::optional<std::string> answer_override = {});

} // namespace mindflow::agent
