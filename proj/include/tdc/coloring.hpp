#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/errors.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

/// A partition of {1..n} into nonempty color classes V_1..V_l.
///
/// Classes keep the order they were given in; `by_size()` gives the
/// canonical view with v_1 >= v_2 >= ... >= v_l.
class Coloring {
public:
    Coloring(int n, std::vector<VertexSet> classes) : n_(n), classes_(std::move(classes)) { validate(); }

    Coloring(int n, const std::vector<std::vector<int>>& classes) : n_(n) {
        classes_.reserve(classes.size());
        for (const auto& c : classes) {
            VertexSet s(n);
            for (int v : c) {
                if (v < 1 || v > n)
                    throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
                if (s.contains(v))
                    throw InvalidInput("vertex " + std::to_string(v) + " repeated within a class");
                s.insert(v);
            }
            classes_.push_back(std::move(s));
        }
        validate();
    }

    /// Builds a coloring from per-vertex colors; color[v-1] is v's color, any
    /// integers, classes ordered by first appearance.
    static Coloring from_colors(const std::vector<int>& color) {
        const int n = static_cast<int>(color.size());
        std::vector<int> seen;
        std::vector<VertexSet> classes;
        for (int v = 1; v <= n; ++v) {
            int c = color[static_cast<std::size_t>(v - 1)];
            auto it = std::find(seen.begin(), seen.end(), c);
            if (it == seen.end()) {
                seen.push_back(c);
                classes.emplace_back(n);
                it = seen.end() - 1;
            }
            classes[static_cast<std::size_t>(it - seen.begin())].insert(v);
        }
        return Coloring(n, std::move(classes));
    }

    int n() const { return n_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<VertexSet>& classes() const { return classes_; }
    const VertexSet& operator[](std::size_t i) const { return classes_.at(i); }

    std::vector<int> sizes() const {
        std::vector<int> s;
        for (const auto& c : classes_) s.push_back(c.size());
        return s;
    }

    /// Classes sorted by decreasing size; ties keep their original order.
    std::vector<VertexSet> by_size() const {
        std::vector<VertexSet> out = classes_;
        std::stable_sort(out.begin(), out.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
        return out;
    }

    /// color_of()[v-1] is the 0-based index of v's class.
    std::vector<int> color_of() const {
        std::vector<int> c(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < classes_.size(); ++i)
            classes_[i].for_each([&](int v) { c[static_cast<std::size_t>(v - 1)] = static_cast<int>(i); });
        return c;
    }

    std::vector<std::vector<int>> to_lists() const {
        std::vector<std::vector<int>> out;
        for (const auto& c : classes_) out.push_back(c.to_vector());
        return out;
    }

    friend bool operator==(const Coloring& a, const Coloring& b) {
        return a.n_ == b.n_ && a.classes_ == b.classes_;
    }

private:
    void validate() const {
        if (n_ < 1) throw InvalidInput("coloring needs n >= 1");
        VertexSet seen(n_);
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            const auto& c = classes_[i];
            if (c.universe() != n_) throw InvalidInput("class universe does not match n");
            if (c.empty()) throw InvalidInput("class " + std::to_string(i + 1) + " is empty");
            if (c.intersects(seen))
                throw InvalidInput("vertex " + std::to_string((c & seen).front()) +
                                   " appears in more than one class");
            seen |= c;
        }
        if (seen.size() != n_)
            throw InvalidInput("vertex " + std::to_string((VertexSet::all(n_) - seen).front()) +
                               " is not colored");
    }

    int n_;
    std::vector<VertexSet> classes_;
};

struct ClassRecord {
    VertexSet members;
    int size = 0;
    VertexSet common_neighborhood;
    int cn_size = 0;
};

struct ColoringReport {
    int n = 0;
    bool proper = false;
    std::vector<ClassRecord> classes;
    bool tdc = false;
    /// Vertices that totally dominate no class, ascending.
    std::vector<int> uncovered;

    int cn_total() const {
        int s = 0;
        for (const auto& c : classes) s += c.cn_size;
        return s;
    }
};

inline void require_same_order(const CirculantGraph& g, const Coloring& c) {
    if (g.n() != c.n())
        throw InvalidInput("coloring is for n=" + std::to_string(c.n()) + " but graph has n=" +
                           std::to_string(g.n()));
}

inline bool is_independent(const CirculantGraph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

inline bool is_proper(const CirculantGraph& g, const Coloring& c) {
    require_same_order(g, c);
    return std::all_of(c.classes().begin(), c.classes().end(),
                       [&](const VertexSet& s) { return is_independent(g, s); });
}

/// CN(X) = { v : X is a subset of N(v) }.
inline VertexSet common_neighborhood(const CirculantGraph& g, const VertexSet& cls) {
    if (cls.empty()) throw InvalidInput("common neighborhood of an empty class");
    if (cls.universe() != g.n()) throw InvalidInput("class universe does not match graph");
    // Adjacency is symmetric, so CN(X) is the intersection of N(x) over x in X.
    VertexSet cn = VertexSet::all(g.n());
    cls.for_each([&](int x) { cn &= g.neighbors(x); });
    return cn;
}

inline VertexSet common_neighborhood(const CirculantGraph& g, const std::vector<int>& cls) {
    return common_neighborhood(g, VertexSet(g.n(), cls));
}

/// Proper coloring in which every vertex is adjacent to all of some class.
inline ColoringReport is_tdc(const CirculantGraph& g, const Coloring& c) {
    require_same_order(g, c);
    ColoringReport r;
    r.n = g.n();
    r.proper = is_proper(g, c);
    VertexSet covered(g.n());
    for (const auto& cls : c.classes()) {
        ClassRecord rec;
        rec.members = cls;
        rec.size = cls.size();
        rec.common_neighborhood = common_neighborhood(g, cls);
        rec.cn_size = rec.common_neighborhood.size();
        covered |= rec.common_neighborhood;
        r.classes.push_back(std::move(rec));
    }
    r.uncovered = (VertexSet::all(g.n()) - covered).to_vector();
    r.tdc = r.proper && r.uncovered.empty();
    return r;
}

/// For C_n(1,3), n >= 9: every class has v_i + v_i' <= 5 when v_i <= 4 and
/// v_i' = 0 when v_i >= 5.
inline bool class_size_capacity_check(const CirculantGraph& g, const Coloring& c) {
    if (g.n() < 9) throw InvalidInput("capacity check applies to n >= 9, got " + std::to_string(g.n()));
    if (!g.is_standard()) throw InvalidInput("capacity check applies to C_n(1,3), got " + g.name());
    require_same_order(g, c);
    for (const auto& cls : c.classes()) {
        int v = cls.size();
        int cn = common_neighborhood(g, cls).size();
        if (v <= 4 && v + cn > 5) return false;
        if (v >= 5 && cn != 0) return false;
    }
    return true;
}

/// Greedy proper coloring over the given vertex order (smallest free color).
inline Coloring greedy_coloring(const CirculantGraph& g, const std::vector<int>& order) {
    const int n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int v : order) {
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        g.neighbors(v).for_each([&](int u) {
            int cu = color[static_cast<std::size_t>(u - 1)];
            if (cu >= 0) used[static_cast<std::size_t>(cu)] = true;
        });
        int c = 0;
        while (used[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v - 1)] = c;
    }
    return Coloring::from_colors(color);
}

/// Greedy coloring over a uniformly shuffled vertex order.
inline Coloring random_greedy_coloring(const CirculantGraph& g, std::uint64_t seed) {
    std::vector<int> order(static_cast<std::size_t>(g.n()));
    std::iota(order.begin(), order.end(), 1);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return greedy_coloring(g, order);
}

}  // namespace tdc
