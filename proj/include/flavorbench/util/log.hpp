#pragma once

#include <iostream>
#include <mutex>
#include <string_view>

namespace flavorbench {

// Minimal structured-ish logging to stderr: "[level] component: message".
inline std::mutex& log_mutex() {
  static std::mutex mu;
  return mu;
}

inline void log_line(std::string_view level, std::string_view component,
                     std::string_view message) {
  std::lock_guard<std::mutex> lock(log_mutex());
  std::cerr << "[" << level << "] " << component << ": " << message << "\n";
}

inline void log_info(std::string_view component, std::string_view message) {
  log_line("info", component, message);
}

inline void log_warn(std::string_view component, std::string_view message) {
  log_line("warn", component, message);
}

}  // namespace flavorbench
