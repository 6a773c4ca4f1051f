#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/detail/mask_graph.hpp"
#include "tdc/errors.hpp"
#include "tdc/invariants.hpp"

// Exhaustive and sampled checks of structural facts about C_n(1,3).

namespace tdc {

struct CommonNeighborCheck {
    int n = 0;
    long pairs = 0;
    long pair_violations = 0;
    long triples = 0;
    long triple_violations = 0;
    std::vector<std::vector<int>> examples;

    bool holds() const { return pair_violations == 0 && triple_violations == 0; }
};

/// Expected |CN({u,v})| from the cycle distance: 3, 2, 1 at distance 2, 4, 6; 0 otherwise.
inline int expected_pair_cn(int n, int u, int v) {
    switch (circular_distance(n, u, v)) {
        case 2: return 3;
        case 4: return 2;
        case 6: return 1;
        default: return 0;
    }
}

/// Expected |CN({u,v,w})|: 2 for pairwise distances {2,2,4}, 1 for {2,4,6}, else 0.
inline int expected_triple_cn(int n, int u, int v, int w) {
    int d[3] = {circular_distance(n, u, v), circular_distance(n, v, w), circular_distance(n, u, w)};
    std::sort(d, d + 3);
    if (d[0] == 2 && d[1] == 2 && d[2] == 4) return 2;
    if (d[0] == 2 && d[1] == 4 && d[2] == 6) return 1;
    return 0;
}

/// Compares |CN| of every pair and triple of C_n(1,3) against the distance rule.
inline CommonNeighborCheck check_common_neighbor_sizes(int n) {
    auto g = standard_graph(n);
    CommonNeighborCheck r;
    r.n = n;
    auto note = [&](std::vector<int> ex) {
        if (r.examples.size() < 8) r.examples.push_back(std::move(ex));
    };
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            ++r.pairs;
            int got = (g.neighbors(u) & g.neighbors(v)).size();
            if (got != expected_pair_cn(n, u, v)) {
                ++r.pair_violations;
                note({u, v});
            }
            for (int w = v + 1; w <= n; ++w) {
                ++r.triples;
                int got3 = (g.neighbors(u) & g.neighbors(v) & g.neighbors(w)).size();
                if (got3 != expected_triple_cn(n, u, v, w)) {
                    ++r.triple_violations;
                    note({u, v, w});
                }
            }
        }
    return r;
}

/// Largest independent set of g containing both an odd and an even label (0 if none).
inline int max_mixed_parity_independent_set(const CirculantGraph& g, int limit = Limits::kDefaultOracle) {
    require_within("mixed-parity independent set", g.n(), limit);
    detail::MaskGraph m(g);
    detail::Mask odd = 0;
    for (int i = 0; i < m.n; i += 2) odd |= detail::bit(i);  // label i+1 is odd
    int best = 0;
    // Enumerate all independent sets; a set is recorded once both parities occur.
    auto dfs = [&](auto&& self, detail::Mask cand, detail::Mask chosen, int size) -> void {
        if ((chosen & odd) != 0 && (chosen & ~odd) != 0) best = std::max(best, size);
        if (size + detail::popcount(cand) <= best) return;
        while (cand != 0) {
            int v = detail::lowest(cand);
            cand &= cand - 1;
            self(self, cand & ~m[v], chosen | detail::bit(v), size + 1);
        }
    };
    dfs(dfs, m.all(), 0, 0);
    return best;
}

/// Proper coloring whose first class is `big`, the rest greedy over a shuffled order.
inline Coloring coloring_with_class(const CirculantGraph& g, const VertexSet& big, std::uint64_t seed) {
    if (!is_independent(g, big)) throw InvalidInput("class " + big.to_string() + " is not independent");
    std::vector<int> rest = (VertexSet::all(g.n()) - big).to_vector();
    std::mt19937_64 rng(seed);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    big.for_each([&](int v) { color[static_cast<std::size_t>(v - 1)] = 0; });
    for (int v : rest) {
        std::vector<bool> used(static_cast<std::size_t>(g.n()) + 1, false);
        used[0] = true;
        g.neighbors(v).for_each([&](int u) {
            int cu = color[static_cast<std::size_t>(u - 1)];
            if (cu >= 0) used[static_cast<std::size_t>(cu)] = true;
        });
        int c = 1;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v - 1)] = c;
    }
    return Coloring::from_colors(color);
}

}  // namespace tdc
