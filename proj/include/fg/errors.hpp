#pragma once

// Error types shared by every module.  Library code throws; the CLI maps
// UsageError to exit code 2 and ConsistencyError to exit code 1.

#include <stdexcept>
#include <string>

namespace fg {

// Caller handed us something outside an operation's precondition
// (algebra mismatch, atypical weight to typical_character, ...).
class UsageError : public std::invalid_argument {
  public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical cross-check failed: two computation paths disagree, a
// translation candidate is ambiguous where it should be unique, etc.  The
// message carries the witness.
class ConsistencyError : public std::runtime_error {
  public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fg
