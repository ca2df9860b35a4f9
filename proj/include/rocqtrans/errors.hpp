/*
Copyright (c) 2026 the rocqtrans developers. All rights reserved.
Released under Apache 2.0 license as described in the file LICENSE.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace rocqtrans {

// Fatal configuration or store mismatch. CLI exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Durable store failure (I/O error, corrupt line). Campaign-halting.
struct StoreError : std::runtime_error {
  explicit StoreError(const std::string& msg) : std::runtime_error(msg) {}
};

// A statement could not be extracted from a source file or model response.
struct ExtractionError : std::runtime_error {
  explicit ExtractionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The global cost ceiling was reached. CLI exit code 2.
struct BudgetExhaustedError : std::runtime_error {
  explicit BudgetExhaustedError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Provider failure that is worth retrying (transport-level).
struct RetryableBackendError : std::runtime_error {
  explicit RetryableBackendError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Provider rejection attributed to the attempt (auth, context overflow).
struct FatalBackendError : std::runtime_error {
  explicit FatalBackendError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// No checker service could be reached. CLI exit code 3.
struct CheckerUnreachableError : std::runtime_error {
  explicit CheckerUnreachableError(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace rocqtrans
