#include "mindflow/dialogue.hpp"

#include "mindflow/utils.hpp"

namespace mindflow {

std::string_view role_name(Role role) {
    switch (role) {
        case Role::System: return "system";
        case Role::User: return "user";
        case Role::Assistant: return "assistant";
    }
    return "user";
}

Role role_from_name(std::string_view name) {
    if (name == "system") return Role::System;
    if (name == "user") return Role::User;
    if (name == "assistant") return Role::Assistant;
    fail(Errc::UnknownRole, "'" + std::string(name) + "' is not a role");
}

std::string_view author_name(AuthorKind author) {
    switch (author) {
        case AuthorKind::Ai: return "ai";
        case AuthorKind::CustomerRepresentative: return "customer_representative";
        case AuthorKind::Customer: return "customer";
    }
    return "customer";
}

AuthorKind author_from_name(std::string_view name) {
    if (name == "ai") return AuthorKind::Ai;
    if (name == "customer_representative") return AuthorKind::CustomerRepresentative;
    if (name == "customer") return AuthorKind::Customer;
    fail(Errc::InvalidArgument, "'" + std::string(name) + "' is not an author kind");
}

std::vector<StateActionPair> enumerate_state_action_pairs(const Dialogue& dialogue) {
    std::vector<StateActionPair> pairs;
    bool chain_active = false;
    std::size_t state_index = 0;
    for (std::size_t i = 0; i < dialogue.messages.size(); ++i) {
        const Message& m = dialogue.messages[i];
        switch (m.role) {
            case Role::User:
                chain_active = true;
                state_index = i;
                break;
            case Role::Assistant:
                if (chain_active) {
                    pairs.push_back({i, dialogue.messages[state_index].content, m.content});
                }
                // consecutive assistant messages keep sharing the same state
                break;
            case Role::System:
                chain_active = false;
                break;
        }
    }
    return pairs;
}

Trajectory build_trajectory(const Dialogue& dialogue,
                            const std::map<std::size_t, RewardScore>& rewards) {
    if (dialogue.messages.empty()) {
        fail(Errc::EmptyDialogue, "dialogue has no messages");
    }
    const auto pairs = enumerate_state_action_pairs(dialogue);
    if (pairs.empty()) {
        fail(Errc::EmptyDialogue, "dialogue has no user->assistant pairs");
    }
    Trajectory trajectory;
    trajectory.steps.reserve(pairs.size());
    int t = 1;
    for (const auto& pair : pairs) {
        const auto it = rewards.find(pair.assistant_index);
        if (it == rewards.end()) {
            fail(Errc::MissingReward,
                 "assistant message at index " + std::to_string(pair.assistant_index) +
                     " has no reward");
        }
        trajectory.steps.push_back({t, pair.state, it->second, pair.action});
        ++t;
    }
    return trajectory;
}

std::vector<std::string> validate_dialogue(const Dialogue& dialogue) {
    std::vector<std::string> violations;
    if (dialogue.messages.empty()) {
        violations.push_back("dialogue: no messages");
        return violations;
    }
    bool has_user = false;
    std::optional<std::int64_t> last_ts;
    for (std::size_t i = 0; i < dialogue.messages.size(); ++i) {
        const Message& m = dialogue.messages[i];
        if (m.role == Role::User) {
            has_user = true;
        }
        if (m.role == Role::System && i != 0) {
            violations.push_back("message " + std::to_string(i) +
                                 ": system message not at index 0");
        }
        if (trim_copy(m.content).empty()) {
            violations.push_back("message " + std::to_string(i) + ": empty content");
        }
        if (m.timestamp) {
            if (last_ts && *m.timestamp < *last_ts) {
                violations.push_back("message " + std::to_string(i) +
                                     ": timestamp decreases");
            }
            last_ts = m.timestamp;
        }
    }
    if (!has_user) {
        violations.push_back("dialogue: contains no user message");
    }
    return violations;
}

} // namespace mindflow
