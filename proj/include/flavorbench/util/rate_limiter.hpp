#pragma once

#include <memory>
#include <mutex>

#include "flavorbench/util/clock.hpp"

namespace flavorbench {

// Spaces grants at least 1/per_second apart. Shared process-wide per
// backend; per_second <= 0 disables limiting.
class RateLimiter {
 public:
  RateLimiter(std::shared_ptr<Clock> clock, double per_second)
      : clock_(std::move(clock)), per_second_(per_second) {}

  void acquire() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (per_second_ <= 0) return;
    const double interval = 1.0 / per_second_;
    const double now = clock_->now();
    if (now < next_free_) {
      clock_->sleep_for(next_free_ - now);
      next_free_ += interval;
    } else {
      next_free_ = now + interval;
    }
  }

 private:
  std::mutex mutex_;
  std::shared_ptr<Clock> clock_;
  double per_second_;
  double next_free_ = 0.0;
};

}  // namespace flavorbench
