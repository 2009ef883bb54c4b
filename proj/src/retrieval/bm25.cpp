#include "flavorbench/retrieval/bm25.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "flavorbench/retrieval/tokenizer.hpp"
#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/hash.hpp"
#include "flavorbench/util/jsonl.hpp"

namespace flavorbench::retrieval {

Bm25Index build_index(const std::vector<Passage>& corpus, double k1, double b) {
  if (corpus.empty()) throw DataError("cannot build BM25 index from an empty corpus");
  if (k1 <= 0) throw DataError("BM25 k1 must be positive");
  if (b < 0 || b > 1) throw DataError("BM25 b must be in [0, 1]");

  Bm25Index index;
  index.k1 = k1;
  index.b = b;
  index.passages = corpus;
  index.lengths.reserve(corpus.size());

  Fnv1a64 hasher;
  long long total_length = 0;
  for (std::size_t pid = 0; pid < corpus.size(); ++pid) {
    hasher.update(corpus[pid].text).update("\n");
    const auto tokens = tokenize(corpus[pid].text);
    index.lengths.push_back(static_cast<int>(tokens.size()));
    total_length += static_cast<long long>(tokens.size());
    std::unordered_map<std::string, int> frequencies;
    for (const auto& token : tokens) frequencies[token]++;
    for (const auto& [term, frequency] : frequencies) {
      index.postings[term].push_back({static_cast<int>(pid), frequency});
    }
  }
  // Postings were appended in ascending pid order already; keep the
  // invariant explicit.
  for (auto& [term, postings] : index.postings) {
    std::sort(postings.begin(), postings.end(),
              [](const Posting& x, const Posting& y) { return x.passage_id < y.passage_id; });
  }
  index.average_length =
      static_cast<double>(total_length) / static_cast<double>(corpus.size());
  index.corpus_hash = hasher.value();
  return index;
}

std::vector<ScoredPassage> retrieve(const Bm25Index& index, const std::string& query, int k) {
  if (k < 1) throw DataError("retrieve requires k >= 1");
  const auto query_tokens = tokenize(query);
  const std::set<std::string> terms(query_tokens.begin(), query_tokens.end());

  const double n = static_cast<double>(index.passages.size());
  std::unordered_map<int, double> scores;
  for (const auto& term : terms) {
    const auto it = index.postings.find(term);
    if (it == index.postings.end()) continue;
    const auto& postings = it->second;
    const double df = static_cast<double>(postings.size());
    const double idf = std::log((n - df + 0.5) / (df + 0.5) + 1.0);
    for (const auto& posting : postings) {
      const double tf = static_cast<double>(posting.term_frequency);
      const double length_norm =
          1.0 - index.b + index.b * static_cast<double>(index.lengths[posting.passage_id]) /
                              index.average_length;
      scores[posting.passage_id] += idf * tf * (index.k1 + 1.0) / (tf + index.k1 * length_norm);
    }
  }

  std::vector<ScoredPassage> ranked;
  ranked.reserve(scores.size());
  for (const auto& [pid, score] : scores) ranked.push_back({pid, score});
  std::sort(ranked.begin(), ranked.end(), [](const ScoredPassage& x, const ScoredPassage& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.passage_id < y.passage_id;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(static_cast<std::size_t>(k));
  return ranked;
}

void save_index(const Bm25Index& index, const std::filesystem::path& path) {
  std::vector<json> lines;
  lines.push_back({{"format", "flavorbench-bm25"},
                   {"format_version", 1},
                   {"k1", index.k1},
                   {"b", index.b},
                   {"passage_count", index.passages.size()},
                   {"average_length", index.average_length},
                   {"corpus_hash", index.corpus_hash}});
  for (std::size_t pid = 0; pid < index.passages.size(); ++pid) {
    lines.push_back({{"kind", "passage"},
                     {"id", pid},
                     {"food_id", index.passages[pid].food_id},
                     {"text", index.passages[pid].text},
                     {"length", index.lengths[pid]}});
  }
  for (const auto& [term, postings] : index.postings) {
    json entry = {{"kind", "term"}, {"term", term}};
    json pairs = json::array();
    for (const auto& posting : postings) {
      pairs.push_back({posting.passage_id, posting.term_frequency});
    }
    entry["postings"] = pairs;
    lines.push_back(entry);
  }
  write_jsonl(path, lines);
}

Bm25Index load_index(const std::filesystem::path& path) {
  const auto lines = read_jsonl(path);
  if (lines.empty()) throw DataError("empty index file: " + path.string());
  Bm25Index index;
  try {
    const json& header = lines.front();
    if (header.value("format", "") != "flavorbench-bm25" ||
        header.value("format_version", 0) != 1) {
      throw DataError("unrecognized index format in " + path.string());
    }
    index.k1 = header.at("k1").get<double>();
    index.b = header.at("b").get<double>();
    index.average_length = header.at("average_length").get<double>();
    index.corpus_hash = header.at("corpus_hash").get<std::uint64_t>();
    const auto passage_count = header.at("passage_count").get<std::size_t>();
    index.passages.resize(passage_count);
    index.lengths.resize(passage_count);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const json& line = lines[i];
      const std::string kind = line.at("kind").get<std::string>();
      if (kind == "passage") {
        const auto pid = line.at("id").get<std::size_t>();
        if (pid >= passage_count) throw DataError("passage id out of range in index");
        index.passages[pid] = {line.at("food_id").get<std::int64_t>(),
                               line.at("text").get<std::string>()};
        index.lengths[pid] = line.at("length").get<int>();
      } else if (kind == "term") {
        std::vector<Posting> postings;
        for (const auto& pair : line.at("postings")) {
          postings.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
        }
        index.postings[line.at("term").get<std::string>()] = std::move(postings);
      } else {
        throw DataError("unknown record kind '" + kind + "' in index");
      }
    }
  } catch (const json::exception& e) {
    throw DataError("invalid index file " + path.string() + ": " + e.what());
  }
  return index;
}

}  // namespace flavorbench::retrieval
