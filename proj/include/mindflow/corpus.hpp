#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mindflow/dialogue.hpp"
#include "mindflow/trace_grammar.hpp"

namespace mindflow::corpus {

using grammar::ToolCall;

struct Candidate {
    std::string response;
    RewardScore reward;
    bool operator==(const Candidate&) const = default;
};

struct TraceRound {
    std::string thought;
    ToolCall action;
    std::string observation;
    bool operator==(const TraceRound&) const = default;
};

struct RawRecord {
    std::string id; // assigned at ingestion when the file omits it
    std::string query;
    std::string original_answer;
    std::optional<std::string> background;
    std::optional<std::vector<Candidate>> candidates;
    std::optional<std::vector<TraceRound>> trace;
    bool contrastive = false; // when set, candidates must mix rewards 1 and 0
};

std::vector<std::string> validate_record(const RawRecord& record);

struct KnowledgeEntry {
    std::string id;
    std::string title;
    std::string body;
    std::vector<std::string> tags;
    bool operator==(const KnowledgeEntry&) const = default;
};

enum class OrderingMode { SRA, RSA };
enum class CorpusFormat {
    PairedQA,
    KnowledgeAugmented,
    AgenticReAct,
    RewardConditioned,
    IntegratedReasoningReward,
};

std::string_view ordering_name(OrderingMode mode);
OrderingMode ordering_from_name(std::string_view name);
std::string_view format_name(CorpusFormat format);
CorpusFormat format_from_name(std::string_view name);
std::vector<CorpusFormat> all_formats();

// Byte range [begin, end) within one message's content that serves as a
// training label. Spans only ever reference assistant messages.
struct LossSpan {
    std::size_t message_index = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
    bool operator==(const LossSpan&) const = default;
};

struct TrainingExample {
    Dialogue dialogue;
    CorpusFormat format = CorpusFormat::PairedQA;
    OrderingMode ordering = OrderingMode::SRA;
    std::vector<LossSpan> loss_spans;
    bool operator==(const TrainingExample&) const = default;
};

// Ranks entries by overlap score |query terms ∩ entry terms| / |entry terms|
// (terms from title, body and tags, case folded). Ties break by ascending id.
// Scores compare exactly via cross multiplication, so reordering the input
// never changes the result. Returns min(k, |kb|) entries.
std::vector<KnowledgeEntry> select_knowledge(std::string_view query,
                                             const std::vector<KnowledgeEntry>& kb,
                                             std::size_t k);

struct BuildOptions {
    std::size_t knowledge_k = 3;
    std::size_t knowledge_budget = 2000; // max chars of the composed system message
};

TrainingExample build_paired_qa(const RawRecord& record);
TrainingExample build_knowledge_augmented(const RawRecord& record,
                                          const std::vector<KnowledgeEntry>& kb,
                                          const BuildOptions& options = {});
TrainingExample build_agentic(const RawRecord& record);
TrainingExample build_reward_conditioned(const RawRecord& record, OrderingMode ordering);
TrainingExample build_integrated(const RawRecord& record, OrderingMode ordering);

// Spans covering exactly the assistant content minus reward-tag markup.
// System and user messages contribute nothing. Pure and idempotent.
std::vector<LossSpan> compute_loss_mask(const TrainingExample& example);

void write_corpus(const std::vector<TrainingExample>& examples,
                  const std::filesystem::path& path);
std::vector<TrainingExample> read_corpus(const std::filesystem::path& path);

std::vector<RawRecord> read_raw_records(const std::filesystem::path& path);
std::vector<KnowledgeEntry> read_knowledge_base(const std::filesystem::path& path);

struct FormatStats {
    CorpusFormat format = CorpusFormat::PairedQA;
    std::size_t built = 0;
    std::size_t skipped = 0; // records missing this format's prerequisites
};

struct ForgeResult {
    std::vector<TrainingExample> examples; // record-major, format order preserved
    std::vector<FormatStats> stats;
};

// Builds the requested formats for every record, in parallel over records,
// with deterministic (input-order) output. Records lacking a format's
// prerequisites are counted as skipped rather than aborting the run.
ForgeResult forge(const std::vector<RawRecord>& records,
                  const std::vector<CorpusFormat>& formats,
                  OrderingMode ordering,
                  const std::vector<KnowledgeEntry>& kb,
                  const BuildOptions& options = {},
                  std::size_t parallelism = 1);

} // namespace mindflow::corpus
