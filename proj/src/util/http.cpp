#include "flavorbench/util/http.hpp"

#include "httplib.h"

#include "flavorbench/util/errors.hpp"

namespace flavorbench {

std::atomic<bool> NetworkGuard::allowed_{true};

namespace {

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /path?query
};

SplitUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw ExternalServiceError("invalid url (missing scheme): " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

httplib::Headers to_httplib(const HttpHeaders& headers) {
  httplib::Headers out;
  for (const auto& [key, value] : headers) out.emplace(key, value);
  return out;
}

HttpResponse to_response(const httplib::Result& result) {
  if (!result) {
    return {0, "transport error: " + httplib::to_string(result.error())};
  }
  return {result->status, result->body};
}

void check_guard(const std::string& url) {
  if (!NetworkGuard::outbound_allowed()) {
    throw NetworkDisabledError("outbound networking is disabled; blocked request to " + url);
  }
}

}  // namespace

HttpResponse HttplibTransport::get(const std::string& url, const HttpHeaders& headers) {
  check_guard(url);
  const SplitUrl parts = split_url(url);
  httplib::Client client(parts.origin);
  client.set_connection_timeout(std::chrono::duration<double>(timeout_seconds_));
  client.set_read_timeout(std::chrono::duration<double>(timeout_seconds_));
  return to_response(client.Get(parts.path, to_httplib(headers)));
}

HttpResponse HttplibTransport::post(const std::string& url, const HttpHeaders& headers,
                                    const std::string& body,
                                    const std::string& content_type) {
  check_guard(url);
  const SplitUrl parts = split_url(url);
  httplib::Client client(parts.origin);
  client.set_connection_timeout(std::chrono::duration<double>(timeout_seconds_));
  client.set_read_timeout(std::chrono::duration<double>(timeout_seconds_));
  return to_response(client.Post(parts.path, to_httplib(headers), body, content_type));
}

}  // namespace flavorbench
