#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace decomp {

/// Malformed or inconsistent input: bad text, unknown symbols, mismatched
/// alphabets, automata with unreachable states where they are not allowed.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (non-S.P. partition passed
/// to quotient, missing source partitions, non-distributive lattice, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive search was refused because its estimated size is too large.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  std::uint64_t estimate() const noexcept { return estimate_; }

 private:
  std::uint64_t estimate_;
};

/// A result that a theorem guarantees failed to materialize.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace decomp
