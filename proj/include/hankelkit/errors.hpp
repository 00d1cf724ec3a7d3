#pragma once

#include <stdexcept>
#include <string>

namespace hankelkit {

/// Input outside an operation's mathematical domain (bad sizes, indices, parity).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A stated precondition on parameter values does not hold.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Work would exceed a configured size cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A linear solve came back with a residual above the accepted bound.
class ConditioningError : public std::runtime_error {
public:
    explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hankelkit
