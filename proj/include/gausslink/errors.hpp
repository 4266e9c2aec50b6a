#pragma once

#include <stdexcept>
#include <string>

namespace gausslink {

// Domain-level failures (CLI exit code 1). Input/parse failures live in
// codec.hpp as ParseError (exit code 2).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Operation requires a non-splittable paragraph but got one that splits.
class SplittableInputError : public DomainError {
public:
    explicit SplittableInputError(const std::string& what) : DomainError(what) {}
};

// Presentation graph has a component with Euler characteristic < 0.
class NotRealizableError : public DomainError {
public:
    explicit NotRealizableError(const std::string& what) : DomainError(what) {}
};

// Homomorphism enumeration would exceed the desk-scale budget.
class SearchTooLargeError : public DomainError {
public:
    explicit SearchTooLargeError(const std::string& what) : DomainError(what) {}
};

// Requested built-in group table beyond the supported size.
class TooLargeError : public DomainError {
public:
    explicit TooLargeError(const std::string& what) : DomainError(what) {}
};

} // namespace gausslink
