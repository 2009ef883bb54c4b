#pragma once

#include <string>
#include <vector>

namespace flavorbench::llm {

struct ChatMessage {
  std::string role;  // "system" | "user" | "assistant"
  std::string content;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;  // a system message, if any, comes first
  double temperature = 0.0;
  int max_tokens = 512;
  std::string model_name;
};

struct ChatUsage {
  int prompt_tokens = 0;
  int completion_tokens = 0;
  bool reported = false;
};

struct ChatResponse {
  std::string text;
  ChatUsage usage;
  double latency_ms = 0.0;
};

class ChatBackend {
 public:
  virtual ~ChatBackend() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
  virtual std::string name() const = 0;
};

// Throws DataError when a system message appears anywhere but first.
void validate_request(const ChatRequest& request);

}  // namespace flavorbench::llm
