#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "flavorbench/retrieval/passage.hpp"

namespace flavorbench::retrieval {

struct Posting {
  int passage_id = 0;  // index into passages
  int term_frequency = 0;
};

// Immutable after build; concurrent retrieval is safe.
struct Bm25Index {
  double k1 = 1.2;
  double b = 0.75;
  std::vector<Passage> passages;
  std::vector<int> lengths;  // token counts
  double average_length = 0.0;
  std::map<std::string, std::vector<Posting>> postings;  // sorted by passage id
  std::uint64_t corpus_hash = 0;
};

struct ScoredPassage {
  int passage_id = 0;
  double score = 0.0;
};

Bm25Index build_index(const std::vector<Passage>& corpus, double k1 = 1.2, double b = 0.75);

// idf(t) = ln((N - df + 0.5)/(df + 0.5) + 1), the +1-smoothed variant, so
// scores stay non-negative for common terms. Query terms are deduplicated.
// Results: passages sharing at least one term, descending score, ties broken
// by ascending passage id, truncated to k.
std::vector<ScoredPassage> retrieve(const Bm25Index& index, const std::string& query, int k);

// Self-describing line-record format: a header with format version,
// parameters and corpus hash, then passages, then one postings line per term.
void save_index(const Bm25Index& index, const std::filesystem::path& path);
Bm25Index load_index(const std::filesystem::path& path);

}  // namespace flavorbench::retrieval
