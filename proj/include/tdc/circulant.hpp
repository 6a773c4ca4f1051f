#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tdc/errors.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

/// Maps any integer onto a vertex label in 1..n (residue 0 becomes n).
inline int wrap_label(long long x, int n) {
    long long r = x % n;
    if (r < 0) r += n;
    return r == 0 ? n : static_cast<int>(r);
}

/// Length of the shorter arc between u and v on the cycle (1, 2, ..., n).
inline int circular_distance(int n, int u, int v) {
    int d = std::abs(u - v) % n;
    return std::min(d, n - d);
}

/// Multiplicative inverse of a modulo n in 0..n-1; throws when gcd(a, n) != 1.
inline int mod_inverse(long long a, int n) {
    long long r0 = n, r1 = ((a % n) + n) % n;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    if (r0 != 1)
        throw InvalidInput("gcd(" + std::to_string(a) + ", " + std::to_string(n) +
                           ") != 1: no inverse");
    return static_cast<int>(((s0 % n) + n) % n);
}

/// How generators that collapse under normalization are treated.
///  - strict: a generator that is 0 mod n, or two generators with the same
///    circular distance, are errors.
///  - merge: zero generators are dropped (they would only add loops) and
///    duplicates are merged. This is the literal edge-set reading of C_n(S)
///    and is what lets e.g. C_4(1,3) mean the 4-cycle.
enum class GeneratorPolicy { strict, merge };

class CirculantGraph {
public:
    int n() const { return n_; }
    const std::vector<int>& connection_set() const { return connections_; }
    const VertexSet& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v - 1)); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }

    /// Degree shared by every vertex: 2|S|-1 if n/2 is in S, 2|S| otherwise.
    int regular_degree() const {
        int k = 2 * static_cast<int>(connections_.size());
        if (n_ % 2 == 0 && std::binary_search(connections_.begin(), connections_.end(), n_ / 2)) --k;
        return k;
    }

    /// True when the normalized connection set equals that of C_n(1,3).
    bool is_standard() const { return connections_ == standard_connections(n_); }

    /// Edges as (i, j) with i < j, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 1; i <= n_; ++i)
            neighbors(i).for_each([&](int j) {
                if (i < j) out.emplace_back(i, j);
            });
        return out;
    }

    std::string name() const {
        std::string s = "C_" + std::to_string(n_) + "(";
        for (std::size_t i = 0; i < connections_.size(); ++i)
            s += (i ? "," : "") + std::to_string(connections_[i]);
        return s + ")";
    }

    static std::vector<int> standard_connections(int n) {
        std::vector<int> s;
        for (int g : {1, 3}) {
            int d = circular_distance(n, 0, g);
            if (d != 0 && std::find(s.begin(), s.end(), d) == s.end()) s.push_back(d);
        }
        std::sort(s.begin(), s.end());
        return s;
    }

private:
    friend CirculantGraph build_circulant(int, const std::vector<int>&, GeneratorPolicy);

    int n_ = 0;
    std::vector<int> connections_;
    std::vector<VertexSet> adjacency_;
};

/// Builds C_n(S). Vertex labels are 1..n; generators are normalized to
/// circular distances min(g mod n, n - g mod n).
inline CirculantGraph build_circulant(int n, const std::vector<int>& generators,
                                      GeneratorPolicy policy = GeneratorPolicy::strict) {
    if (n < 3) throw InvalidInput("circulant graph needs n >= 3, got " + std::to_string(n));
    if (generators.empty()) throw InvalidInput("connection set is empty");

    std::vector<int> set;
    for (int g : generators) {
        int d = circular_distance(n, 0, wrap_label(g, n) % n);
        if (d == 0) {
            if (policy == GeneratorPolicy::strict)
                throw InvalidInput("generator " + std::to_string(g) + " is 0 mod " + std::to_string(n));
            continue;
        }
        if (std::find(set.begin(), set.end(), d) != set.end()) {
            if (policy == GeneratorPolicy::strict)
                throw InvalidInput("generator " + std::to_string(g) + " duplicates circular distance " +
                                   std::to_string(d));
            continue;
        }
        set.push_back(d);
    }
    if (set.empty()) throw InvalidInput("connection set is empty after normalization");
    std::sort(set.begin(), set.end());

    CirculantGraph g;
    g.n_ = n;
    g.connections_ = std::move(set);
    g.adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (int v = 1; v <= n; ++v) {
        auto& nb = g.adjacency_[static_cast<std::size_t>(v - 1)];
        for (int s : g.connections_) {
            nb.insert(wrap_label(v + s, n));
            nb.insert(wrap_label(v - s, n));
        }
    }
    return g;
}

/// C_n(1,3), using the literal edge-set reading for the degenerate n = 3, 4.
inline CirculantGraph standard_graph(int n) {
    return build_circulant(n, {1, 3}, GeneratorPolicy::merge);
}

struct ReductionResult {
    int n = 0;
    int a = 0;
    int b = 0;
    int a_inverse = 0;
    /// a^{-1} b mod n in 0..n-1, before folding.
    int raw_c = 0;
    /// raw_c folded into 1..floor(n/2).
    int standard_c = 0;
    /// vertex_map[x-1] is the image of label x under x -> a^{-1} x (mod n).
    std::vector<int> vertex_map;

    int map(int x) const { return vertex_map.at(static_cast<std::size_t>(x - 1)); }
};

/// C_n(a,b) is isomorphic to C_n(1,c) with c = a^{-1} b (mod n).
inline ReductionResult reduce_to_standard(int n, int a, int b) {
    if (n < 3) throw InvalidInput("reduction needs n >= 3, got " + std::to_string(n));
    if (wrap_label(a, n) == n) throw InvalidInput("a = " + std::to_string(a) + " is 0 mod n");
    if (wrap_label(b, n) == n) throw InvalidInput("b = " + std::to_string(b) + " is 0 mod n");
    if (std::gcd(((a % n) + n) % n, n) != 1)
        throw InvalidInput("gcd(a, n) = gcd(" + std::to_string(a) + ", " + std::to_string(n) +
                           ") != 1; reduction undefined");

    ReductionResult r;
    r.n = n;
    r.a = a;
    r.b = b;
    r.a_inverse = mod_inverse(a, n);
    r.raw_c = static_cast<int>((static_cast<long long>(r.a_inverse) * (((b % n) + n) % n)) % n);
    r.standard_c = circular_distance(n, 0, r.raw_c);
    r.vertex_map.resize(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
        r.vertex_map[static_cast<std::size_t>(x - 1)] =
            wrap_label(static_cast<long long>(r.a_inverse) * x, n);
    return r;
}

/// True iff {i,j} is an edge of g1 exactly when {map(i), map(j)} is an edge of g2.
/// map[x-1] is the image of label x.
inline bool verify_isomorphism(const CirculantGraph& g1, const CirculantGraph& g2,
                               const std::vector<int>& map) {
    const int n = g1.n();
    if (g2.n() != n)
        throw InvalidInput("vertex counts differ: " + std::to_string(n) + " vs " + std::to_string(g2.n()));
    if (static_cast<int>(map.size()) != n) throw InvalidInput("map has wrong length");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int img : map) {
        if (img < 1 || img > n || hit[static_cast<std::size_t>(img - 1)])
            throw InvalidInput("map is not a bijection on 1.." + std::to_string(n));
        hit[static_cast<std::size_t>(img - 1)] = true;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (g1.adjacent(i, j) != g2.adjacent(map[i - 1], map[j - 1])) return false;
    return true;
}

}  // namespace tdc
