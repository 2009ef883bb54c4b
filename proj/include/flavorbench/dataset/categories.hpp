#pragma once

#include <optional>
#include <string>
#include <vector>

namespace flavorbench::dataset {

// The 21 macro categories, canonical spelling.
const std::vector<std::string>& category_table();

// Case- and trailing-plural-insensitive match against the table. Returns the
// canonical label, or nullopt for anything else (a silent 22nd category is
// never created).
std::optional<std::string> canonical_category(const std::string& raw);

// Closest valid label by edit distance over normalized forms, for error
// messages.
std::string nearest_category(const std::string& raw);

// Normalization used for matching: lowercase, collapse whitespace,
// singularize the trailing word.
std::string normalize_category(const std::string& raw);

}  // namespace flavorbench::dataset
