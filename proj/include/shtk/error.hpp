#pragma once

#include <stdexcept>
#include <string>

namespace shtk {

// Domain error carrying a stable machine-readable code (e.g. "d-squared-nonzero")
// next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message);

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

// Raised when an algorithm reaches a state its preconditions rule out.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error("internal-error", message) {}
};

}  // namespace shtk
