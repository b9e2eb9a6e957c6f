#pragma once

#include <stdexcept>
#include <string>

namespace bprm {

// CLI exit codes.
enum class ExitCode : int { Ok = 0, ConfigError = 2, DataError = 3, RuntimeCap = 4 };

// Precondition or numerical-domain violation in a computation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration (bad ladder, bad prior bounds, unknown method, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid or inconsistent input data.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The represented-cluster count would exceed the configured maximum.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bprm
