#pragma once

#include <stdexcept>
#include <string>

namespace tdc {

/// Input violates an operation's precondition (bad n, bad generator, non-partition, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search was refused because n exceeds the configured limit.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what, int n, int limit)
        : std::runtime_error(what + ": n=" + std::to_string(n) + " exceeds limit " +
                             std::to_string(limit)),
          n_(n), limit_(limit) {}

    int n() const { return n_; }
    int limit() const { return limit_; }

private:
    int n_;
    int limit_;
};

}  // namespace tdc
