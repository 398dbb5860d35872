#pragma once

#include <stdexcept>
#include <string>

namespace gelfand {

/// Bad arguments from a caller (size mismatch, invalid flags, unsupported
/// configuration). Maps to exit code 2 in the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested enumeration exceeds the configured bounds.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A value violates a documented precondition (non-involution input,
/// unstable subspace, non-minimal orbit, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gelfand
