#pragma once

#include <stdexcept>
#include <string>

namespace sbnet {

/// Malformed input: bad file contents, out-of-range indices, duplicate or
/// missing table entries.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation precondition (point outside the domain,
/// wrong parity, zero coefficient where nonzero is required, ...).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation would exceed a configured resource budget. Never silently
/// truncated; the caller must raise the budget explicitly.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sbnet
