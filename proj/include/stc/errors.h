#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge lists, unparsable instance files.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  /// 1-based line number for file parse errors, 0 otherwise.
  int line() const { return line_; }

 private:
  int line_;
};

/// A caller violated an operation's contract (malformed partition, unknown name, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// The input is outside the class a specialised routine accepts. Carries a
/// witness (vertex or edge indices, depending on the routine).
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, std::vector<int> witness)
      : Error(what), witness_(std::move(witness)) {}

  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

/// An exact search would exceed a configured size limit.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace stc
