#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
/// Bits strictly above position i.
inline Mask above(int i) { return i >= 63 ? 0 : ~(bit(i + 1) - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Word-packed copy of a graph with n <= 64; vertex label v lives at bit v-1.
struct MaskGraph {
    int n = 0;
    int max_degree = 0;
    std::vector<Mask> nb;

    explicit MaskGraph(const CirculantGraph& g) : n(g.n()), nb(static_cast<std::size_t>(g.n())) {
        for (int v = 1; v <= n; ++v) {
            nb[static_cast<std::size_t>(v - 1)] = g.neighbors(v).to_mask();
            max_degree = std::max(max_degree, g.degree(v));
        }
    }

    Mask all() const { return full_mask(n); }
    Mask operator[](int i) const { return nb[static_cast<std::size_t>(i)]; }
    VertexSet to_set(Mask m) const { return VertexSet::from_mask(n, m); }
};

}  // namespace tdc::detail
