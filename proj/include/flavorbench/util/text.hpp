#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flavorbench {

std::string trim(std::string_view s);
std::string lower_ascii(std::string_view s);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

// Replaces ASCII punctuation with spaces (used by the category judge).
std::string strip_punctuation(std::string_view s);

// Singularizes the last word: "berries"->"berry", "dishes"->"dish",
// "spices"->"spice"; words ending in "ss" are left alone.
std::string singularize_last_word(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::size_t levenshtein(std::string_view a, std::string_view b);

bool starts_with_icase(std::string_view s, std::string_view prefix);

}  // namespace flavorbench
