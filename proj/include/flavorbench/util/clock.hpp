#pragma once

#include <chrono>
#include <thread>

namespace flavorbench {

// Seconds-based clock so rate limiting and backoff are testable without
// real waiting.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now() = 0;
  virtual void sleep_for(double seconds) = 0;
};

class SystemClock : public Clock {
 public:
  double now() override {
    const auto t = std::chrono::steady_clock::now().time_since_epoch();
    return std::chrono::duration<double>(t).count();
  }
  void sleep_for(double seconds) override {
    if (seconds > 0) std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
  }
};

// Sleeping advances virtual time instantly.
class MockClock : public Clock {
 public:
  double now() override { return now_; }
  void sleep_for(double seconds) override {
    if (seconds > 0) now_ += seconds;
  }

 private:
  double now_ = 0.0;
};

}  // namespace flavorbench
