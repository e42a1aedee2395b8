#pragma once

#include <stdexcept>
#include <string>

namespace raux {

// Every failure raised by the library is a DomainError so the command-line
// front end can map all of them to a single exit status.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct BranchError : DomainError {
    using DomainError::DomainError;
};

struct RegionError : DomainError {
    using DomainError::DomainError;
};

struct ConditioningError : DomainError {
    using DomainError::DomainError;
};

struct ConvergenceError : DomainError {
    using DomainError::DomainError;
};

struct OrderError : DomainError {
    using DomainError::DomainError;
};

} // namespace raux
