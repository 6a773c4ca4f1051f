#pragma once

// Naive reference computations for tests. Deliberately independent of the
// library: adjacency comes straight from circular distances and every search
// is plain enumeration.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <vector>

namespace oracle {

inline bool adjacent(int n, int u, int v, const std::vector<int>& gens) {
    if (u == v) return false;
    int d = std::abs(u - v) % n;
    for (int g : gens) {
        int s = ((g % n) + n) % n;
        if (s != 0 && (d == s || d == n - s)) return true;
    }
    return false;
}

inline std::vector<std::vector<int>> neighbors(int n, const std::vector<int>& gens) {
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            if (adjacent(n, u, v, gens)) nb[static_cast<std::size_t>(u)].push_back(v);
    return nb;
}

/// Calls f on every subset of {1..n} given as a sorted vector (2^n subsets).
inline void for_each_subset(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> s;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        s.clear();
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1UL) s.push_back(i + 1);
        f(s);
    }
}

inline int independence_number(int n, const std::vector<int>& gens) {
    int best = 0;
    for_each_subset(n, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) <= best) return;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (adjacent(n, s[i], s[j], gens)) return;
        best = static_cast<int>(s.size());
    });
    return best;
}

inline int open_packing_number(int n, const std::vector<int>& gens) {
    int best = 0;
    for_each_subset(n, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) <= best) return;
        for (int w = 1; w <= n; ++w) {
            int hits = 0;
            for (int x : s) hits += adjacent(n, w, x, gens);
            if (hits > 1) return;
        }
        best = static_cast<int>(s.size());
    });
    return best;
}

inline int total_domination_number(int n, const std::vector<int>& gens) {
    int best = n + 1;
    for_each_subset(n, [&](const std::vector<int>& s) {
        if (static_cast<int>(s.size()) >= best) return;
        for (int w = 1; w <= n; ++w)
            if (std::none_of(s.begin(), s.end(), [&](int x) { return adjacent(n, w, x, gens); })) return;
        best = static_cast<int>(s.size());
    });
    return best;
}

/// Minimum number of classes in a TDC, by enumerating every set partition of
/// {1..n} as a restricted growth string. Bell(n) partitions; fine for n <= 12.
inline int tdc_number_by_partitions(int n, const std::vector<int>& gens) {
    std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
    int best = n + 1;
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (used >= best) return;
        if (v > n) {
            for (int w = 1; w <= n; ++w) {
                bool dominated = false;
                for (int c = 0; c < used && !dominated; ++c) {
                    bool all = true;
                    for (int x = 1; x <= n && all; ++x)
                        if (color[static_cast<std::size_t>(x)] == c && !adjacent(n, w, x, gens)) all = false;
                    dominated = all;
                }
                if (!dominated) return;
            }
            best = used;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            bool ok = true;
            for (int u = 1; u < v && ok; ++u)
                if (color[static_cast<std::size_t>(u)] == c && adjacent(n, u, v, gens)) ok = false;
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            rec(v + 1, std::max(used, c + 1));
        }
    };
    rec(1, 0);
    return best;
}

}  // namespace oracle
