#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nctoric {

/// Domain error carrying a machine-readable name such as "FieldMismatch" or
/// "NotSimple". The CLI maps every Error to exit code 4 and reports name().
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed external input (bad JSON, unparsable scalar literal).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message) {
  throw Error(name, message);
}

}  // namespace nctoric
