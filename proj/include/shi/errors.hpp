#pragma once

#include <stdexcept>
#include <string>

namespace shi {

/// Input violates the invariants of a domain type.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested size exceeds the configured enumeration bound.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Two independent computations disagreed; always a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool condition, const std::string& message) {
    if (!condition) {
        throw ValidationError(message);
    }
}

inline void guard_size(int n, int limit, const std::string& what) {
    if (n > limit) {
        throw ResourceLimitError(what + ": n=" + std::to_string(n) + " exceeds bound " +
                                 std::to_string(limit));
    }
}

}  // namespace shi
