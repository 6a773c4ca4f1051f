#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tdc/errors.hpp"

namespace tdc {

/// Size caps for the exponential searches. Word-packed searches cannot go past 64.
struct Limits {
    static constexpr int kDefaultOracle = 24;
    static constexpr int kDefaultSolver = 24;
    static constexpr int kHardCap = 64;

    int oracle = kDefaultOracle;
    int solver = kDefaultSolver;

    /// Defaults overridden by TDC_ORACLE_LIMIT / TDC_SOLVER_LIMIT when set.
    static Limits from_env() {
        Limits l;
        l.oracle = read("TDC_ORACLE_LIMIT", l.oracle);
        l.solver = read("TDC_SOLVER_LIMIT", l.solver);
        return l;
    }

private:
    static int read(const char* name, int fallback) {
        const char* raw = std::getenv(name);
        if (raw == nullptr || *raw == '\0') return fallback;
        char* end = nullptr;
        long v = std::strtol(raw, &end, 10);
        if (*end != '\0' || v < 3 || v > kHardCap)
            throw InvalidInput(std::string(name) + " must be an integer in 3.." + std::to_string(kHardCap));
        return static_cast<int>(v);
    }
};

inline void require_within(const char* what, int n, int limit) {
    if (n > limit || n > Limits::kHardCap) throw LimitExceeded(what, n, std::min(limit, Limits::kHardCap));
}

}  // namespace tdc
