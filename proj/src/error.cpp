#include "mindflow/error.hpp"

namespace mindflow {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::EmptyDialogue: return "empty_dialogue";
        case Errc::MissingReward: return "missing_reward";
        case Errc::UnbalancedTag: return "unbalanced_tag";
        case Errc::NestedTag: return "nested_tag";
        case Errc::MalformedToolCall: return "malformed_tool_call";
        case Errc::InvalidReward: return "invalid_reward";
        case Errc::DuplicateRewardTag: return "duplicate_reward_tag";
        case Errc::SpecialTokenInPayload: return "special_token_in_payload";
        case Errc::InvalidSegmentSequence: return "invalid_segment_sequence";
        case Errc::UnterminatedTurn: return "unterminated_turn";
        case Errc::UnknownRole: return "unknown_role";
        case Errc::UnexpectedText: return "unexpected_text";
        case Errc::NoKnowledgeAvailable: return "no_knowledge_available";
        case Errc::MissingTrace: return "missing_trace";
        case Errc::MissingCandidates: return "missing_candidates";
        case Errc::SchemaViolation: return "schema_violation";
        case Errc::IoFailure: return "io_failure";
        case Errc::MalformedAction: return "malformed_action";
        case Errc::UnknownTool: return "unknown_tool";
        case Errc::ToolFailure: return "tool_failure";
        case Errc::UnusableTranscript: return "unusable_transcript";
        case Errc::ModelError: return "model_error";
        case Errc::Timeout: return "timeout";
        case Errc::RateLimited: return "rate_limited";
        case Errc::Transport: return "transport";
        case Errc::FixtureMissing: return "fixture_missing";
        case Errc::ReplayExhausted: return "replay_exhausted";
        case Errc::ZeroDenominator: return "zero_denominator";
        case Errc::UnjudgedMessage: return "unjudged_message";
        case Errc::UnparseableVerdict: return "unparseable_verdict";
        case Errc::LengthMismatch: return "length_mismatch";
        case Errc::DegenerateInput: return "degenerate_input";
        case Errc::InvalidTemplate: return "invalid_template";
        case Errc::InvalidArgument: return "invalid_argument";
    }
    return "unknown_error";
}

} // namespace mindflow
