#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace explicit_lab {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so each subclass names one failure category.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed numbers, unknown keys, out-of-domain arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class OrderError : public Error {
public:
    OrderError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class AdmissibilityError : public Error {
public:
    using Error::Error;
};

// Requested size exceeds a configured memory guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Query outside the range covered by a table.
class RangeError : public Error {
public:
    using Error::Error;
};

// A pairing window reaches past the data backing a measure. `resource()`
// names the deficient input ("zeros", "primes", "comb").
class CoverageError : public Error {
public:
    CoverageError(std::string resource, const std::string& what)
        : Error(resource + " coverage insufficient: " + what), resource_(std::move(resource)) {}
    const std::string& resource() const noexcept { return resource_; }

private:
    std::string resource_;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

// Numerical procedure failed to reach its accuracy target.
class AccuracyError : public Error {
public:
    using Error::Error;
};

class IllConditionedError : public Error {
public:
    using Error::Error;
};

}  // namespace explicit_lab
