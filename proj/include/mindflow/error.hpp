#pragma once

#include <stdexcept>
#include <string>

namespace mindflow {

// Every failure mode in the library maps to one code. Codes are stable and
// printable; CLI exit codes are derived from them.
enum class Errc {
    // dialogue core
    EmptyDialogue,
    MissingReward,
    // trace grammar
    UnbalancedTag,
    NestedTag,
    MalformedToolCall,
    InvalidReward,
    DuplicateRewardTag,
    SpecialTokenInPayload,
    InvalidSegmentSequence,
    UnterminatedTurn,
    UnknownRole,
    UnexpectedText,
    // corpus forge
    NoKnowledgeAvailable,
    MissingTrace,
    MissingCandidates,
    SchemaViolation,
    IoFailure,
    // agent loop
    MalformedAction,
    UnknownTool,
    ToolFailure,
    UnusableTranscript,
    // model gateway
    ModelError,
    Timeout,
    RateLimited,
    Transport,
    FixtureMissing,
    ReplayExhausted,
    // acr eval
    ZeroDenominator,
    UnjudgedMessage,
    UnparseableVerdict,
    LengthMismatch,
    DegenerateInput,
    // shared
    InvalidTemplate,
    InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace mindflow
