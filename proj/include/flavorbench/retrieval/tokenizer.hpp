#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace flavorbench::retrieval {

// Lowercase, split on non-alphanumeric, keep digits; no stemming and no
// stopword removal (chemical names fragment meaningfully on hyphens, and
// stemming would corrupt nomenclature).
std::vector<std::string> tokenize(std::string_view text);

}  // namespace flavorbench::retrieval
