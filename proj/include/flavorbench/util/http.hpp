#pragma once

#include <atomic>
#include <map>
#include <string>

namespace flavorbench {

struct HttpResponse {
  int status = 0;  // 0 = transport-level failure (message in body)
  std::string body;
};

using HttpHeaders = std::map<std::string, std::string>;

// Process-wide switch. Every outbound HTTP request in this codebase goes
// through HttpTransport, so disabling the guard makes any network access
// throw NetworkDisabledError — the mechanism behind the offline-purity
// checks.
class NetworkGuard {
 public:
  static bool outbound_allowed() { return allowed_.load(); }
  static void set_outbound_allowed(bool allowed) { allowed_.store(allowed); }

  class ScopedDisable {
   public:
    ScopedDisable() { NetworkGuard::set_outbound_allowed(false); }
    ~ScopedDisable() { NetworkGuard::set_outbound_allowed(true); }
  };

 private:
  static std::atomic<bool> allowed_;
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse get(const std::string& url, const HttpHeaders& headers = {}) = 0;
  virtual HttpResponse post(const std::string& url, const HttpHeaders& headers,
                            const std::string& body,
                            const std::string& content_type = "application/json") = 0;
};

// cpp-httplib based transport. URLs are "http(s)://host[:port]/path".
class HttplibTransport : public HttpTransport {
 public:
  explicit HttplibTransport(double timeout_seconds = 30.0)
      : timeout_seconds_(timeout_seconds) {}

  HttpResponse get(const std::string& url, const HttpHeaders& headers) override;
  HttpResponse post(const std::string& url, const HttpHeaders& headers,
                    const std::string& body, const std::string& content_type) override;

 private:
  double timeout_seconds_;
};

}  // namespace flavorbench
