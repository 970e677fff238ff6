#pragma once

#include <stdexcept>
#include <string>

namespace bierkit {

// Malformed textual input (decimal literals, CSV, JSON payloads).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Structurally invalid objects (out-of-range labels, duplicate points, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

class RankDeficiencyError : public std::runtime_error {
public:
    explicit RankDeficiencyError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check disagreed with the primary computation.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace bierkit
