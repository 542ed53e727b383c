#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mindflow {

// Prompt templates are versioned text assets under assets/prompts/; the
// defaults are embedded at build time so binaries work without a checkout.
struct PromptSet {
    std::string thought;
    std::string response;
    std::string judge;
    std::string fallback; // final response when the backend fails
};

PromptSet default_prompts();
PromptSet load_prompts(const std::filesystem::path& dir);

// Replaces every {{key}} with vars.at(key); unknown placeholders are left
// in place.
std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& vars);

// Throws InvalidTemplate when any {{name}} placeholder is absent.
void require_placeholders(std::string_view tmpl,
                          const std::vector<std::string>& names);

} // namespace mindflow
