#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindflow/dialogue.hpp"
#include "mindflow/gateway.hpp"

namespace mindflow::acr {

// Inclusive on both ends.
struct TimeWindow {
    std::int64_t start = 0;
    std::int64_t end = 0;
};

// An evaluation log is a dialogue whose messages all carry an author and a
// timestamp, plus 0/1 judgments keyed by message index for ai-authored
// messages.
struct EvalLog {
    Dialogue dialogue;
    std::map<std::size_t, int> judgments;
};

std::vector<std::string> validate_eval_log(const EvalLog& log);

struct ACRReport {
    std::size_t v_ai = 0; // ai messages judged valid
    std::size_t t_ai = 0; // ai messages in window
    std::size_t t_cr = 0; // customer-representative messages in window
    double ratio = 0.0;   // v_ai / (t_ai + t_cr)
    TimeWindow window;
};

// Label-only taxonomy for reports; never derived from a ratio.
enum class AutomationLevel { X0, X1, X2, X3, X4, X5 };

std::string_view automation_level_name(AutomationLevel level);       // "X1"
std::string_view automation_level_descriptor(AutomationLevel level); // "Robot Assistance"
AutomationLevel automation_level_from_name(std::string_view name);

// Counts by author within [window.start, window.end]; customer messages are
// excluded from the denominator. Throws UnjudgedMessage when an in-window
// ai message lacks a judgment, ZeroDenominator when t_ai + t_cr == 0.
ACRReport compute_acr(const EvalLog& log, const TimeWindow& window);

struct JudgeFailure {
    std::size_t message_index = 0;
    std::string reason;
};

struct JudgeOutcome {
    EvalLog log;                       // input judgments plus new ones
    std::vector<JudgeFailure> failures;
    std::size_t calls = 0;             // gateway calls made
};

// One gateway call per unjudged ai message (plus one automatic re-ask when
// the verdict is unparseable). The template must contain {{inquiry_context}},
// {{representative_responses}} and {{candidate_message}}. Already-judged
// messages are never re-judged. Per-message failures are flagged, not fatal.
JudgeOutcome judge_messages(const EvalLog& log, gateway::Gateway& gw,
                            std::string_view prompt_template,
                            std::size_t parallelism = 1);

// First standalone 0/1 digit in a judge reply, or nullopt.
std::optional<int> parse_verdict(std::string_view reply);

// Spearman's rank correlation with average ranks for ties. Throws
// LengthMismatch and DegenerateInput (constant input or n < 2).
double spearman(const std::vector<double>& manual_scores,
                const std::vector<double>& api_scores);

struct CalibrationReport {
    double rho = 0.0;
    std::size_t n = 0;
    std::vector<std::string> disagreements; // item ids where manual != api
};

// Inner-joins the two labelled score lists on item id and correlates them.
CalibrationReport calibrate(const std::vector<std::pair<std::string, double>>& manual,
                            const std::vector<std::pair<std::string, double>>& api);

struct LabeledReport {
    std::string label;
    ACRReport report;
};

// Fixed CSV column order: label,v_ai,t_ai,t_cr,ratio_pct,window_start,window_end.
std::string render_report_table(const std::vector<LabeledReport>& reports);
std::string render_report_csv(const std::vector<LabeledReport>& reports);

} // namespace mindflow::acr
