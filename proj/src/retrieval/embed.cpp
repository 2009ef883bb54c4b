#include "flavorbench/retrieval/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "flavorbench/util/errors.hpp"
#include "flavorbench/util/fsio.hpp"
#include "flavorbench/util/hash.hpp"
#include "flavorbench/util/jsonl.hpp"

namespace flavorbench::retrieval {

namespace {

std::uint64_t corpus_text_hash(const std::vector<Passage>& corpus) {
  Fnv1a64 hasher;
  for (const auto& passage : corpus) hasher.update(passage.text).update("\n");
  return hasher.value();
}

void normalize(std::vector<double>& vec) {
  double norm = 0.0;
  for (const double v : vec) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& v : vec) v /= norm;
  }
}

}  // namespace

std::vector<std::vector<double>> EmbeddingClient::embed(const std::vector<std::string>& texts) {
  json body;
  body["texts"] = texts;
  HttpHeaders headers;
  if (!config_.auth_header.empty()) {
    const char* secret =
        config_.auth_env_var.empty() ? nullptr : std::getenv(config_.auth_env_var.c_str());
    headers[config_.auth_header] = secret != nullptr ? secret : "";
  }
  const HttpResponse response = transport_->post(config_.url, headers, body.dump());
  if (response.status != 200) {
    throw ExternalServiceError("embedding service " + config_.url + " failed (status " +
                               std::to_string(response.status) + ")");
  }
  try {
    const json doc = json::parse(response.body);
    auto vectors = doc.at("vectors").get<std::vector<std::vector<double>>>();
    if (vectors.size() != texts.size()) {
      throw ExternalServiceError("embedding service returned " +
                                 std::to_string(vectors.size()) + " vectors for " +
                                 std::to_string(texts.size()) + " texts");
    }
    return vectors;
  } catch (const json::exception& e) {
    throw ExternalServiceError(std::string("embedding service schema mismatch: ") + e.what());
  }
}

std::vector<ScoredPassage> embed_retrieve(EmbeddingClient& client,
                                          const std::vector<Passage>& corpus,
                                          const std::string& query, int k,
                                          const std::filesystem::path& cache_path) {
  if (k < 1) throw DataError("embed_retrieve requires k >= 1");
  if (corpus.empty()) throw DataError("embed_retrieve requires a non-empty corpus");
  const std::uint64_t hash = corpus_text_hash(corpus);

  std::vector<std::vector<double>> corpus_vectors;
  bool cache_valid = false;
  if (std::filesystem::exists(cache_path)) {
    try {
      const json doc = json::parse(read_file(cache_path));
      if (doc.at("corpus_hash").get<std::uint64_t>() == hash) {
        corpus_vectors = doc.at("vectors").get<std::vector<std::vector<double>>>();
        cache_valid = corpus_vectors.size() == corpus.size();
      }
    } catch (const json::exception&) {
      cache_valid = false;  // stale or corrupt cache is rebuilt
    }
  }
  if (!cache_valid) {
    std::vector<std::string> texts;
    texts.reserve(corpus.size());
    for (const auto& passage : corpus) texts.push_back(passage.text);
    corpus_vectors = client.embed(texts);
    json doc;
    doc["corpus_hash"] = hash;
    doc["vectors"] = corpus_vectors;
    atomic_write_file(cache_path, doc.dump());
  }
  for (auto& vec : corpus_vectors) normalize(vec);

  auto query_vectors = client.embed({query});
  normalize(query_vectors[0]);
  const auto& q = query_vectors[0];

  std::vector<ScoredPassage> ranked;
  ranked.reserve(corpus.size());
  for (std::size_t pid = 0; pid < corpus.size(); ++pid) {
    double dot = 0.0;
    const auto& vec = corpus_vectors[pid];
    const std::size_t dim = std::min(vec.size(), q.size());
    for (std::size_t i = 0; i < dim; ++i) dot += vec[i] * q[i];
    ranked.push_back({static_cast<int>(pid), dot});
  }
  std::sort(ranked.begin(), ranked.end(), [](const ScoredPassage& x, const ScoredPassage& y) {
    if (x.score != y.score) return x.score > y.score;
    return x.passage_id < y.passage_id;
  });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(static_cast<std::size_t>(k));
  return ranked;
}

}  // namespace flavorbench::retrieval
