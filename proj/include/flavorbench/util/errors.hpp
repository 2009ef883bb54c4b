#pragma once

#include <stdexcept>
#include <string>

namespace flavorbench {

// Error families map onto CLI exit codes: usage=1, data=2, external service=3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExternalServiceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Authentication failures are never retried.
class AuthError : public ExternalServiceError {
 public:
  using ExternalServiceError::ExternalServiceError;
};

// Thrown by the HTTP transport when outbound networking has been disabled,
// e.g. by the offline-purity test harness.
class NetworkDisabledError : public ExternalServiceError {
 public:
  using ExternalServiceError::ExternalServiceError;
};

}  // namespace flavorbench
