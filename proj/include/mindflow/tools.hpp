#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mindflow/trace_grammar.hpp"

namespace mindflow::agent {

using grammar::ToolCall;

// argument_schema is a minimal JSON shape: {"properties": {name: {"type": t}},
// "required": [names]}. Used for prompt rendering and argument checks.
struct ToolSpec {
    std::string name;
    std::string description;
    nlohmann::json argument_schema = nlohmann::json::object();
};

using ToolFn = std::function<std::string(const nlohmann::json& args)>;

class ToolRegistry {
public:
    void register_tool(ToolSpec spec, ToolFn fn);
    bool contains(const std::string& name) const;
    const ToolSpec& spec(const std::string& name) const;
    std::vector<ToolSpec> specs() const; // name order

    // Dispatches to the named tool after checking required arguments.
    // Throws UnknownTool and ToolFailure.
    std::string execute(const ToolCall& call) const;

private:
    std::map<std::string, std::pair<ToolSpec, ToolFn>> tools_;
};

struct Product {
    std::string id;
    std::string name;
    std::string description;
    std::map<std::string, std::string> attributes;
};

std::vector<Product> load_catalog(const std::filesystem::path& path);

// The four built-in mocks over a fixture catalog: product_info, recommend,
// compare, image_descriptor. All pure functions of (arguments, catalog).
ToolRegistry default_registry(std::vector<Product> catalog);

// One line per tool for the thought prompt.
std::string render_tool_catalog(const ToolRegistry& registry);

} // namespace mindflow::agent
