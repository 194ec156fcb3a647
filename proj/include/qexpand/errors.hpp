#pragma once

#include <stdexcept>

namespace qx {

// Input outside an operation's mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two independent computation routes disagreed; always a bug, never user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// The requested expansion does not exist (e.g. odd powers of arccos at 1).
struct NotExpandableError : DomainError {
    using DomainError::DomainError;
};

// A numeric request exceeds the configured oracle precision limit.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qx
