// Error type shared by all modules. The message text is part of the API.
#pragma once

#include <stdexcept>
#include <string>

namespace qweb {

enum class ErrorKind {
  Math,      // pole at q0, singular, not scalar, divisibility violated
  Parse,     // DSL syntax errors, negative label
  Mismatch,  // object mismatch
  Cap,       // dimension cap exceeded
  Fuel,      // fuel exhausted
  Unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qweb
