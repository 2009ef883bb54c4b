#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "flavorbench/retrieval/bm25.hpp"
#include "flavorbench/util/http.hpp"

namespace flavorbench::retrieval {

// Single HTTP contract for dense retrieval: POST {"texts": [...]} returns
// {"vectors": [[...], ...]}. This is the only dense-retrieval dependency.
struct EmbeddingServiceConfig {
  std::string url;
  std::string auth_header;   // e.g. "Authorization"; empty = no auth header
  std::string auth_env_var;  // env var holding the secret
};

class EmbeddingClient {
 public:
  EmbeddingClient(HttpTransport& transport, EmbeddingServiceConfig config)
      : transport_(&transport), config_(std::move(config)) {}

  // Throws ExternalServiceError on any failure; never falls back silently.
  std::vector<std::vector<double>> embed(const std::vector<std::string>& texts);

 private:
  HttpTransport* transport_;
  EmbeddingServiceConfig config_;
};

// Cosine-similarity ranking over unit-normalized embeddings. Corpus
// embeddings are cached at cache_path keyed by corpus hash; with a valid
// cache present the service is only called for the query.
std::vector<ScoredPassage> embed_retrieve(EmbeddingClient& client,
                                          const std::vector<Passage>& corpus,
                                          const std::string& query, int k,
                                          const std::filesystem::path& cache_path);

}  // namespace flavorbench::retrieval
