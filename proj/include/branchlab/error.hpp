#pragma once

#include <stdexcept>
#include <string>

namespace branchlab {

// Bad user input: unknown series, wrong rank, malformed labels.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (non-dominant weight, zero root, wall).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidSubsystem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotASplint : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The splint exists but the multiplicity transfer does not apply to it.
struct UnsupportedSplint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Injection outside the rank-preserving setting handled by the fan recurrence.
struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency check failed; always a bug or a violated theorem premise.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace branchlab
