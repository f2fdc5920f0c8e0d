#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixchrom {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural violations: loops, duplicates, unknown vertices, missing elements.
class GraphError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// An input exceeds the configured vertex/element limit of an exhaustive method.
class BoundError : public Error {
public:
    using Error::Error;
};

// Arguments outside the counting domain, e.g. a threshold above the palette.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace mixchrom
