#pragma once

#include <stdexcept>
#include <string>

namespace reisner {

enum class ErrorKind {
    InvalidArgument,
    DimensionMismatch,
    SizeLimit,
    NotCLSpace,
    EmptyDomain,
    Parse,
};

const char* to_string(ErrorKind kind);

// Single exception type for every library failure; callers dispatch on kind().
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace reisner
