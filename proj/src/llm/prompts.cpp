#include "flavorbench/llm/prompts.hpp"

#include <algorithm>
#include <cctype>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/log.hpp"

namespace flavorbench::llm {

namespace fs = std::filesystem;

std::vector<std::string> extract_placeholders(const std::string& text) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const auto end = text.find('}', pos + 1);
    if (end == std::string::npos) break;
    const std::string name = text.substr(pos + 1, end - pos - 1);
    const bool valid = !name.empty() &&
                       std::all_of(name.begin(), name.end(), [](unsigned char c) {
                         return std::islower(c) || c == '_';
                       });
    if (valid && std::find(names.begin(), names.end(), name) == names.end()) {
      names.push_back(name);
    }
    pos = valid ? end + 1 : pos + 1;
  }
  return names;
}

PromptCatalog PromptCatalog::load(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw DataError("prompt catalog directory not found: " + dir.string());
  }
  PromptCatalog catalog;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    PromptTemplate tpl;
    tpl.id = file.stem().string();
    tpl.text = read_file(file);
    tpl.placeholders = extract_placeholders(tpl.text);
    catalog.templates_[tpl.id] = std::move(tpl);
  }
  if (catalog.templates_.empty()) {
    throw DataError("prompt catalog is empty: " + dir.string());
  }
  return catalog;
}

const PromptTemplate& PromptCatalog::get(const std::string& id) const {
  const auto it = templates_.find(id);
  if (it == templates_.end()) throw DataError("unknown prompt template '" + id + "'");
  return it->second;
}

std::string PromptCatalog::render(const std::string& id,
                                  const std::map<std::string, std::string>& bindings) const {
  const PromptTemplate& tpl = get(id);
  for (const auto& placeholder : tpl.placeholders) {
    if (!bindings.count(placeholder)) {
      throw DataError("template '" + id + "': missing binding for placeholder '" +
                      placeholder + "'");
    }
  }
  for (const auto& [key, value] : bindings) {
    if (std::find(tpl.placeholders.begin(), tpl.placeholders.end(), key) ==
        tpl.placeholders.end()) {
      log_warn("prompts", "template '" + id + "': unused binding '" + key + "'");
    }
  }

  std::string out;
  out.reserve(tpl.text.size());
  std::size_t pos = 0;
  while (pos < tpl.text.size()) {
    const auto open = tpl.text.find('{', pos);
    if (open == std::string::npos) {
      out.append(tpl.text, pos, std::string::npos);
      break;
    }
    out.append(tpl.text, pos, open - pos);
    const auto close = tpl.text.find('}', open + 1);
    const std::string name =
        close == std::string::npos ? "" : tpl.text.substr(open + 1, close - open - 1);
    const auto binding = bindings.find(name);
    if (binding != bindings.end()) {
      out += binding->second;
      pos = close + 1;
    } else {
      out += '{';
      pos = open + 1;
    }
  }
  return out;
}

std::vector<std::string> PromptCatalog::ids() const {
  std::vector<std::string> out;
  out.reserve(templates_.size());
  for (const auto& [id, tpl] : templates_) out.push_back(id);
  return out;
}

}  // namespace flavorbench::llm
