#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soritic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parse failure; `offset` is the 0-based byte position in the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnboundAtom : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("precisification family is empty") {}
};

class ChainThroughWitness : public Error {
 public:
  using Error::Error;
};

class BackendUnsupported : public Error {
 public:
  using Error::Error;
};

/// Scenario configuration rejected; `pointer` is a JSON pointer to the field.
class ConfigError : public Error {
 public:
  ConfigError(std::string pointer, const std::string& what)
      : Error((pointer.empty() ? std::string("(document)") : pointer) + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace soritic
