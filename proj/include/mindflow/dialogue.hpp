#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindflow/error.hpp"

namespace mindflow {

enum class Role { System, User, Assistant };

// Who actually wrote a message. Evaluation logs require an author on every
// message; corpus data may omit it.
enum class AuthorKind { Ai, CustomerRepresentative, Customer };

std::string_view role_name(Role role);
Role role_from_name(std::string_view name); // throws UnknownRole
std::string_view author_name(AuthorKind author);
AuthorKind author_from_name(std::string_view name); // throws InvalidArgument

// Binary preference score: 1 preferred, 0 suboptimal. No other values exist.
class RewardScore {
public:
    RewardScore() = default;
    explicit RewardScore(int value) : value_(value) {
        if (value != 0 && value != 1) {
            fail(Errc::InvalidReward, "reward must be 0 or 1, got " + std::to_string(value));
        }
    }
    int value() const noexcept { return value_; }
    bool operator==(const RewardScore&) const = default;

private:
    int value_ = 0;
};

struct Message {
    Role role = Role::User;
    std::string content;
    std::optional<AuthorKind> author;
    std::optional<std::int64_t> timestamp; // epoch seconds

    bool operator==(const Message&) const = default;
};

struct Dialogue {
    std::string dialogue_id;
    std::vector<Message> messages;

    bool operator==(const Dialogue&) const = default;
};

// One timestep of the state-reward-action sequence. t starts at 1.
struct TrajectoryStep {
    int t = 1;
    std::string state;  // user input
    RewardScore reward;
    std::string action; // assistant response

    bool operator==(const TrajectoryStep&) const = default;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;

    bool operator==(const Trajectory&) const = default;
};

struct StateActionPair {
    std::size_t assistant_index; // index into Dialogue::messages
    std::string state;
    std::string action;

    bool operator==(const StateActionPair&) const = default;
};

// Pairing rule: an assistant message forms a pair when it belongs to a run of
// assistant messages that directly follows a user message; every message in
// the run shares that user's content as its state. Assistant messages outside
// such runs (e.g. following a system message) are skipped.
std::vector<StateActionPair> enumerate_state_action_pairs(const Dialogue& dialogue);

// rewards is keyed by assistant message index. Throws EmptyDialogue when no
// user->assistant pair exists, MissingReward when a paired assistant message
// has no score.
Trajectory build_trajectory(const Dialogue& dialogue,
                            const std::map<std::size_t, RewardScore>& rewards);

// Returns one human-readable violation per broken invariant, empty when the
// dialogue is well formed. Never throws.
std::vector<std::string> validate_dialogue(const Dialogue& dialogue);

} // namespace mindflow
