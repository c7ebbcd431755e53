#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subsum {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Deduplicated-state cap exceeded during an enumeration.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::uint64_t limit)
      : Error("state budget exceeded (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
};

/// Malformed configuration: bad literal, unknown kind, mixed radicands, ...
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Domain precondition violated (empty set, unsorted P, spacing mismatch, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A certificate or verification report failed to check out.
class VerificationError : public Error {
public:
  using Error::Error;
};

/// Enumeration limits shared by every cover/point enumeration.
struct EnumLimits {
  std::uint64_t max_states = 1ull << 22;
  unsigned threads = 1;
};

}  // namespace subsum
