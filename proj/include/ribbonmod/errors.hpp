#pragma once

#include <stdexcept>
#include <string>

namespace ribbonmod {

/// A query falls outside the range where the underlying statement applies
/// (e.g. reduced genus below 2, non-positive delta). Not a negative verdict.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Intermediate arithmetic left the 64-bit range.
class OverflowError : public DomainError {
public:
    explicit OverflowError(const std::string& what) : DomainError(what) {}
};

/// A degree that must be an integer came out as a half-integer.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ribbonmod
