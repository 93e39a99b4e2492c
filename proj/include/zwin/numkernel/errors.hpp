#pragma once

#include <stdexcept>
#include <string>

namespace zwin {

// Exit-code families used by the CLI: contract = 2, infeasible = 3, io = 4.

class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public ContractError {
 public:
  using ContractError::ContractError;
};

// Raised when a working precision cannot deliver the requested accuracy.
class PrecisionError : public ContractError {
 public:
  using ContractError::ContractError;
};

class UnsupportedDegreeError : public ContractError {
 public:
  using ContractError::ContractError;
};

// Nodes coincide; the caller must take the continuous-extension path.
class CoincidentNodesError : public ContractError {
 public:
  using ContractError::ContractError;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WindowRejected : public InfeasibleError {
 public:
  using InfeasibleError::InfeasibleError;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A result contradicts a sign or structure property that must hold.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zwin
