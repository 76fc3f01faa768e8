#pragma once

#include <stdexcept>
#include <string>

namespace milef {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke an interface contract (dimension mismatch, bad argument).
struct ContractError : Error {
  explicit ContractError(const std::string& what) : Error(what) {}
};

/// A documented mathematical precondition does not hold for the given input.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A configured desk-scale resource cap was exceeded.
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(what) {}
};

/// Malformed external input (JSON, rationals, file contents).
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace milef
