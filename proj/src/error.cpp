#include "shtk/error.hpp"

namespace shtk {

Error::Error(std::string code, const std::string& message)
    : std::runtime_error(code + ": " + message), code_(std::move(code)), message_(message) {}

}  // namespace shtk
