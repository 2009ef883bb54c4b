#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace flavorbench::llm {

struct PromptTemplate {
  std::string id;
  std::string text;
  std::vector<std::string> placeholders;  // unique, in order of first appearance
};

// Versioned text files on disk, one per template id ({stem}.txt). Placeholders
// are written {name}. Rendering is deterministic; a missing binding is an
// error naming the placeholder, an unused binding logs a warning.
class PromptCatalog {
 public:
  static PromptCatalog load(const std::filesystem::path& dir);

  const PromptTemplate& get(const std::string& id) const;
  std::string render(const std::string& id,
                     const std::map<std::string, std::string>& bindings) const;
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, PromptTemplate> templates_;
};

std::vector<std::string> extract_placeholders(const std::string& text);

}  // namespace flavorbench::llm
