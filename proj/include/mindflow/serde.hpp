#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mindflow/acr.hpp"
#include "mindflow/agent_loop.hpp"
#include "mindflow/corpus.hpp"
#include "mindflow/dialogue.hpp"
#include "mindflow/gateway.hpp"

// JSON shapes for every file format the toolkit reads or writes. Output uses
// ordered_json with explicit field order so repeated runs are byte-identical.
namespace mindflow::serde {

using ojson = nlohmann::ordered_json;

ojson message_to_json(const Message& message);
Message message_from_json(const nlohmann::json& j);

ojson dialogue_to_json(const Dialogue& dialogue);
Dialogue dialogue_from_json(const nlohmann::json& j);

ojson tool_call_to_json(const grammar::ToolCall& call);
grammar::ToolCall tool_call_from_json(const nlohmann::json& j);

ojson example_to_json(const corpus::TrainingExample& example);
corpus::TrainingExample example_from_json(const nlohmann::json& j);

corpus::RawRecord raw_record_from_json(const nlohmann::json& j);
ojson raw_record_to_json(const corpus::RawRecord& record);

corpus::KnowledgeEntry knowledge_entry_from_json(const nlohmann::json& j);

ojson eval_log_to_json(const acr::EvalLog& log);
acr::EvalLog eval_log_from_json(const nlohmann::json& j);

// Transcript dump record: a transcript plus the query that produced it.
struct TranscriptRecord {
    std::string query_id;
    std::string query;
    agent::LoopTranscript transcript;
};

ojson transcript_record_to_json(const TranscriptRecord& record);
TranscriptRecord transcript_record_from_json(const nlohmann::json& j);

ojson chat_request_to_json(const gateway::ChatRequest& request);
gateway::ChatRequest chat_request_from_json(const nlohmann::json& j);

// Reads a JSONL file, invoking fn(line_number, parsed) per non-empty line.
// Malformed JSON raises SchemaViolation naming the 1-based line; missing
// files raise IoFailure.
void read_jsonl(const std::filesystem::path& path,
                const std::function<void(std::size_t, const nlohmann::json&)>& fn);

void write_jsonl(const std::filesystem::path& path, const std::vector<ojson>& lines);

std::vector<acr::EvalLog> read_eval_logs(const std::filesystem::path& path);
void write_eval_logs(const std::vector<acr::EvalLog>& logs, const std::filesystem::path& path);

std::vector<Dialogue> read_dialogues(const std::filesystem::path& path);

std::vector<TranscriptRecord> read_transcripts(const std::filesystem::path& path);
void write_transcripts(const std::vector<TranscriptRecord>& records,
                       const std::filesystem::path& path);

// item_id,score rows with a header line.
std::vector<std::pair<std::string, double>> read_manual_labels_csv(const std::filesystem::path& path);

} // namespace mindflow::serde
