#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/detail/mask_graph.hpp"
#include "tdc/errors.hpp"
#include "tdc/limits.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

// ---------------------------------------------------------------------------
// Closed forms for C_n(1,3)
// ---------------------------------------------------------------------------

/// alpha(C_n(1,3)) for n >= 4: n/2 for even n, (n-3)/2 for odd n.
inline int independence_number_formula(int n) {
    if (n < 4) throw InvalidInput("independence formula needs n >= 4, got " + std::to_string(n));
    return n % 2 == 0 ? n / 2 : (n - 3) / 2;
}

/// Open packing number of C_n(1,3) for n >= 3.
inline int open_packing_number_formula(int n) {
    if (n < 3) throw InvalidInput("open packing formula needs n >= 3, got " + std::to_string(n));
    if (n <= 6) return n / 3;
    if (n % 8 == 4 || n % 8 == 6) return n / 4 - 1;
    return n / 4;
}

/// gamma_t(C_n(1,3)) for n >= 4.
inline int total_domination_number_formula(int n) {
    if (n < 4) throw InvalidInput("total domination formula needs n >= 4, got " + std::to_string(n));
    int q = (n + 3) / 4;
    return (n % 8 == 2 || n % 8 == 4) ? q + 1 : q;
}

// ---------------------------------------------------------------------------
// Exhaustive oracles
// ---------------------------------------------------------------------------

enum class Invariant { independence, open_packing, total_domination, chromatic };

inline const char* to_string(Invariant i) {
    switch (i) {
        case Invariant::independence: return "independence";
        case Invariant::open_packing: return "open_packing";
        case Invariant::total_domination: return "total_domination";
        case Invariant::chromatic: return "chromatic";
    }
    return "?";
}

struct InvariantValue {
    Invariant name{};
    std::optional<int> closed_form;
    std::optional<int> oracle;
    std::optional<VertexSet> witness;
    std::optional<Coloring> witness_coloring;
    std::optional<bool> agree;

    void settle() {
        if (closed_form && oracle) agree = (*closed_form == *oracle);
    }
};

inline bool is_open_packing(const CirculantGraph& g, const VertexSet& s) {
    VertexSet seen(g.n());
    bool ok = true;
    s.for_each([&](int v) {
        ok = ok && !g.neighbors(v).intersects(seen);
        seen |= g.neighbors(v);
    });
    return ok;
}

inline bool is_total_dominating(const CirculantGraph& g, const VertexSet& s) {
    for (int v = 1; v <= g.n(); ++v)
        if (!g.neighbors(v).intersects(s)) return false;
    return true;
}

namespace detail {

/// Lexicographically least set of exactly k vertices, drawn in increasing order
/// from `cand`, where choosing v shrinks the candidates to cand & keep[v].
/// Returns false when no such set exists.
inline bool lex_first_compatible(const std::vector<Mask>& keep, Mask cand, int k, Mask& chosen) {
    if (k == 0) return true;
    if (popcount(cand) < k) return false;
    while (cand != 0 && popcount(cand) >= k) {
        int v = lowest(cand);
        cand &= cand - 1;
        Mask next = cand & keep[static_cast<std::size_t>(v)];
        if (lex_first_compatible(keep, next, k - 1, chosen)) {
            chosen |= bit(v);
            return true;
        }
    }
    return false;
}

/// Calls f(mask) for every k-subset of compatible vertices (same rule as above).
template <typename F>
void for_each_compatible(const std::vector<Mask>& keep, Mask cand, int k, Mask chosen, F& f) {
    if (k == 0) {
        f(chosen);
        return;
    }
    while (cand != 0 && popcount(cand) >= k) {
        int v = lowest(cand);
        cand &= cand - 1;
        for_each_compatible(keep, cand & keep[static_cast<std::size_t>(v)], k - 1, chosen | bit(v), f);
    }
}

/// Largest k with a compatible k-set, plus its lexicographically least witness.
inline std::pair<int, Mask> max_compatible(const std::vector<Mask>& keep, Mask all) {
    int best = 0;
    Mask witness = 0;
    for (int k = 1;; ++k) {
        Mask chosen = 0;
        if (!lex_first_compatible(keep, all, k, chosen)) break;
        best = k;
        witness = chosen;
    }
    return {best, witness};
}

inline std::vector<Mask> independence_keep(const MaskGraph& m) {
    std::vector<Mask> keep(static_cast<std::size_t>(m.n));
    for (int v = 0; v < m.n; ++v) keep[static_cast<std::size_t>(v)] = ~m[v];
    return keep;
}

inline std::vector<Mask> packing_keep(const MaskGraph& m) {
    std::vector<Mask> keep(static_cast<std::size_t>(m.n));
    for (int v = 0; v < m.n; ++v) {
        Mask k = ~Mask{0};
        for (int w = 0; w < m.n; ++w)
            if ((m[v] & m[w]) != 0) k &= ~bit(w);
        keep[static_cast<std::size_t>(v)] = k;
    }
    return keep;
}

/// Lexicographically least total dominating set of size exactly k, if any.
/// Vertices are taken in increasing order; the smallest undominated vertex
/// must still have an available neighbor, and each pick covers at most
/// max_degree new vertices.
inline bool lex_first_tds(const MaskGraph& m, Mask cand, Mask dominated, int k, Mask& chosen) {
    Mask open = m.all() & ~dominated;
    if (open == 0) return true;
    if (k == 0) return false;
    if (popcount(open) > k * m.max_degree) return false;
    Mask need = m[lowest(open)] & cand;
    if (need == 0) return false;
    while (cand != 0) {
        int v = lowest(cand);
        // Every later pick is above v; the smallest open vertex must still be reachable.
        if ((need & ~(bit(v) - 1)) == 0) return false;
        cand &= cand - 1;
        if (lex_first_tds(m, cand, dominated | m[v], k - 1, chosen)) {
            chosen |= bit(v);
            return true;
        }
    }
    return false;
}

inline bool color_dfs(const MaskGraph& m, int v, int colors, int used, std::vector<Mask>& cls,
                      std::vector<int>& color) {
    if (v == m.n) return true;
    int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
        if ((cls[static_cast<std::size_t>(c)] & m[v]) != 0) continue;
        cls[static_cast<std::size_t>(c)] |= bit(v);
        color[static_cast<std::size_t>(v)] = c;
        if (color_dfs(m, v + 1, colors, std::max(used, c + 1), cls, color)) return true;
        cls[static_cast<std::size_t>(c)] &= ~bit(v);
    }
    return false;
}

inline int max_clique(const MaskGraph& m, Mask cand, int size) {
    if (cand == 0) return size;
    int best = size;
    while (cand != 0) {
        if (size + popcount(cand) <= best) break;
        int v = lowest(cand);
        cand &= cand - 1;
        best = std::max(best, max_clique(m, cand & m[v], size + 1));
    }
    return best;
}

}  // namespace detail

namespace detail {
inline std::optional<int> standard_closed_form(const CirculantGraph& g, Invariant which) {
    if (!g.is_standard()) return std::nullopt;
    const int n = g.n();
    switch (which) {
        case Invariant::independence:
            if (n >= 4) return independence_number_formula(n);
            break;
        case Invariant::open_packing: return open_packing_number_formula(n);
        case Invariant::total_domination:
            if (n >= 4) return total_domination_number_formula(n);
            break;
        case Invariant::chromatic: break;
    }
    return std::nullopt;
}
}  // namespace detail

/// Maximum independent set by exhaustive search; lexicographically least witness.
inline InvariantValue independence_number_oracle(const CirculantGraph& g, int limit = Limits::kDefaultOracle) {
    require_within("independence oracle", g.n(), limit);
    detail::MaskGraph m(g);
    auto [value, w] = detail::max_compatible(detail::independence_keep(m), m.all());
    InvariantValue r;
    r.name = Invariant::independence;
    r.closed_form = detail::standard_closed_form(g, Invariant::independence);
    r.oracle = value;
    r.witness = m.to_set(w);
    r.settle();
    return r;
}

/// Maximum open packing by exhaustive search; lexicographically least witness.
inline InvariantValue open_packing_number_oracle(const CirculantGraph& g, int limit = Limits::kDefaultOracle) {
    require_within("open packing oracle", g.n(), limit);
    detail::MaskGraph m(g);
    auto [value, w] = detail::max_compatible(detail::packing_keep(m), m.all());
    InvariantValue r;
    r.name = Invariant::open_packing;
    r.closed_form = detail::standard_closed_form(g, Invariant::open_packing);
    r.oracle = value;
    r.witness = m.to_set(w);
    r.settle();
    return r;
}

/// Minimum total dominating set, by increasing cardinality.
inline InvariantValue total_domination_number_oracle(const CirculantGraph& g,
                                                     int limit = Limits::kDefaultOracle) {
    require_within("total domination oracle", g.n(), limit);
    detail::MaskGraph m(g);
    InvariantValue r;
    r.name = Invariant::total_domination;
    r.closed_form = detail::standard_closed_form(g, Invariant::total_domination);
    for (int k = 1; k <= m.n; ++k) {
        detail::Mask chosen = 0;
        if (detail::lex_first_tds(m, m.all(), 0, k, chosen)) {
            r.oracle = k;
            r.witness = m.to_set(chosen);
            break;
        }
    }
    r.settle();
    return r;
}

/// Chromatic number by backtracking from the clique bound; first-use color order.
inline InvariantValue chromatic_number_oracle(const CirculantGraph& g, int limit = Limits::kDefaultOracle) {
    require_within("chromatic oracle", g.n(), limit);
    detail::MaskGraph m(g);
    InvariantValue r;
    r.name = Invariant::chromatic;
    for (int k = detail::max_clique(m, m.all(), 0); k <= m.n; ++k) {
        std::vector<detail::Mask> cls(static_cast<std::size_t>(k), 0);
        std::vector<int> color(static_cast<std::size_t>(m.n), -1);
        if (detail::color_dfs(m, 0, k, 0, cls, color)) {
            r.oracle = k;
            r.witness_coloring = Coloring::from_colors(color);
            break;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Shape of maximum open packings
// ---------------------------------------------------------------------------

struct PackingShape {
    VertexSet packing;
    int edges = 0;
    int isolated = 0;
};

struct OpenPackingStructure {
    int n = 0;
    int rho = 0;
    /// floor(n/8) edges, plus one isolated vertex when n = 5, 7 (mod 8).
    int expected_edges = 0;
    int expected_isolated = 0;
    std::vector<PackingShape> packings;
    /// Packings whose induced subgraph differs from the expected shape.
    std::vector<PackingShape> violations;

    bool holds() const { return violations.empty(); }
};

/// Enumerates every maximum open packing of C_n(1,3) and compares each induced
/// subgraph against floor(n/8) disjoint edges (+1 isolated vertex if n = 5,7 mod 8).
inline OpenPackingStructure max_open_packing_structure(const CirculantGraph& g,
                                                       int limit = Limits::kDefaultOracle) {
    if (!g.is_standard() || g.n() < 7)
        throw InvalidInput("packing structure applies to C_n(1,3) with n >= 7, got " + g.name());
    require_within("packing structure", g.n(), limit);
    detail::MaskGraph m(g);
    auto keep = detail::packing_keep(m);

    OpenPackingStructure s;
    s.n = g.n();
    s.rho = detail::max_compatible(keep, m.all()).first;
    s.expected_edges = s.n / 8;
    s.expected_isolated = (s.n % 8 == 5 || s.n % 8 == 7) ? 1 : 0;

    auto visit = [&](detail::Mask p) {
        PackingShape shape;
        shape.packing = m.to_set(p);
        for (detail::Mask rest = p; rest != 0; rest &= rest - 1) {
            int v = detail::lowest(rest);
            int deg = detail::popcount(m[v] & p);
            if (deg == 0) ++shape.isolated;
            shape.edges += deg;
        }
        shape.edges /= 2;
        bool ok = shape.edges == s.expected_edges && shape.isolated == s.expected_isolated;
        s.packings.push_back(shape);
        if (!ok) s.violations.push_back(shape);
    };
    detail::for_each_compatible(keep, m.all(), s.rho, 0, visit);
    return s;
}

}  // namespace tdc
