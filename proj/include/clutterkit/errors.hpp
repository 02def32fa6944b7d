#pragma once

#include <stdexcept>
#include <string>

namespace clutterkit {

/// Raised when an operation would exceed one of the configured size caps.
/// Callers that want "skipped" semantics catch this type specifically.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace clutterkit
