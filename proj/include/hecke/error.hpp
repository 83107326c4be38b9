#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every error raised by the library. kind() is the machine-readable tag
// used by the command line tool.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Malformed or out-of-domain input.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

// Global or local consistency condition violated while building an object.
// clause() names the condition that failed.
class ConstraintViolation : public Error {
public:
    ConstraintViolation(std::string clause, const std::string& what)
        : Error("constraint_violation", what), clause_(std::move(clause)) {}
    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

// A search exceeded its configured budget.
class ResourceLimit : public Error {
public:
    explicit ResourceLimit(const std::string& what) : Error("resource_limit", what) {}
};

// The data supplied cannot determine a unique answer.
class Ambiguous : public Error {
public:
    explicit Ambiguous(const std::string& what) : Error("ambiguous", what) {}
};

} // namespace hecke
