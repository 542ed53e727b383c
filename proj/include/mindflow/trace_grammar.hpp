#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mindflow/dialogue.hpp"

namespace mindflow::grammar {

// Closed tag vocabulary. Unknown angle-bracket runs are plain text.
inline constexpr std::string_view kThoughtOpen = "<thought>";
inline constexpr std::string_view kThoughtClose = "</thought>";
inline constexpr std::string_view kActionOpen = "<action>";
inline constexpr std::string_view kActionClose = "</action>";
inline constexpr std::string_view kToolCallOpen = "<tool_call>";
inline constexpr std::string_view kToolCallClose = "</tool_call>";
inline constexpr std::string_view kObservationOpen = "<observation>";
inline constexpr std::string_view kObservationClose = "</observation>";
inline constexpr std::string_view kRewardOpen = "<reward>";
inline constexpr std::string_view kRewardClose = "</reward>";
inline constexpr std::string_view kAnswerOpen = "<answer>";
inline constexpr std::string_view kAnswerClose = "</answer>";

inline constexpr std::string_view kImStart = "<|im_start|>";
inline constexpr std::string_view kImEnd = "<|im_end|>";

struct ToolCall {
    std::string name;
    nlohmann::json arguments = nlohmann::json::object();

    bool operator==(const ToolCall& other) const {
        return name == other.name && arguments == other.arguments;
    }
};

// {"name":...,"arguments":...} with that key order and compact spacing.
std::string canonical_tool_call_json(const ToolCall& call);

struct ThoughtSeg {
    std::string text;
    bool operator==(const ThoughtSeg&) const = default;
};

// raw_inner preserves the exact bytes between <action> and </action> as
// parsed, so accepted strings re-serialize byte-identically even when the
// embedded JSON uses nonstandard spacing or key order. Empty raw_inner means
// serialize in canonical form. Equality is semantic (the call only).
struct ActionSeg {
    ToolCall call;
    std::string raw_inner;

    bool operator==(const ActionSeg& other) const { return call == other.call; }
};

struct ObservationSeg {
    std::string text;
    bool operator==(const ObservationSeg&) const = default;
};

struct RewardTagSeg {
    RewardScore score;
    bool operator==(const RewardTagSeg&) const = default;
};

// tagged=true renders as <answer>text</answer>; tagged=false is the bare
// trailing answer that follows a reward tag or observation.
struct AnswerSeg {
    std::string text;
    bool tagged = false;
    bool operator==(const AnswerSeg&) const = default;
};

struct PlainSeg {
    std::string text;
    bool operator==(const PlainSeg&) const = default;
};

using Segment = std::variant<ThoughtSeg, ActionSeg, ObservationSeg, RewardTagSeg, AnswerSeg, PlainSeg>;

struct StructuredAssistantContent {
    std::vector<Segment> segments;
    bool operator==(const StructuredAssistantContent&) const = default;
};

struct ChatMLTurn {
    Role role = Role::User;
    std::string content;
    bool operator==(const ChatMLTurn&) const = default;
};

struct ChatMLDocument {
    std::vector<ChatMLTurn> turns;
    bool operator==(const ChatMLDocument&) const = default;
};

// Splits assistant content into segments covering every input byte exactly
// once. The final untagged run becomes an Answer when a reward tag or
// observation precedes it, otherwise Plain. Throws UnbalancedTag, NestedTag,
// MalformedToolCall, InvalidReward or DuplicateRewardTag.
StructuredAssistantContent parse_assistant_content(std::string_view text);

// Inverse of the parser. Validates that the segment list re-parses to an
// equal list: payloads must be free of special tokens, untagged runs must not
// merge, a bare Answer must sit last after a reward tag or observation.
std::string serialize_assistant_content(const StructuredAssistantContent& content);

// One <|im_start|>role\ncontent<|im_end|> block per message, blocks joined by
// a single newline. Rejects content containing the sentinels.
std::string render_chatml(const Dialogue& dialogue);

// Inverse of render_chatml on its image. Throws UnterminatedTurn, UnknownRole
// or UnexpectedText.
ChatMLDocument parse_chatml(std::string_view text);

// True when text contains any special-token substring (the twelve tags).
bool contains_special_token(std::string_view text);

// Removes every <reward>0</reward> / <reward>1</reward> occurrence.
std::string strip_reward_tags(std::string_view text);

// Byte ranges [begin, end) of reward-tag markup within parseable content;
// empty for content the parser rejects.
std::vector<std::pair<std::size_t, std::size_t>> reward_tag_ranges(std::string_view content);

// Parses the first <action><tool_call>...</tool_call></action> block inside
// free text. Throws MalformedAction when no well-formed block exists.
ToolCall parse_first_action_block(std::string_view text);

} // namespace mindflow::grammar
