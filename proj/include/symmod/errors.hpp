#pragma once

#include <stdexcept>
#include <string>

namespace symmod {

// Raised when a request exceeds a hard size cap (group order, permanent side, ...).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a truncated series is too short to answer the question asked of it.
struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a kernel has no constant term to normalize against.
struct NotNormalizableError : std::runtime_error {
    explicit NotNormalizableError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symmod
