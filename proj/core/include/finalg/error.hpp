#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace finalg {

// All library failures carry a stable machine-readable kind token
// ("parse-error", "unknown-op", "precondition-violated", ...) next to the
// human-readable message. The CLI maps any Error to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace finalg
