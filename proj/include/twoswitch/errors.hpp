#pragma once

#include <stdexcept>
#include <string>

namespace twoswitch {

/// Malformed textual input (edge list, graph6, degree-sequence string).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was called with arguments outside its contract.
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Value-level violation: non-graphical sequence, degree out of range, odd sum.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (order, realization count, search size) was exceeded.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace twoswitch
