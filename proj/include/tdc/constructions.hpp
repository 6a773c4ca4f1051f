#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/formulas.hpp"
#include "tdc/invariants.hpp"
#include "tdc/vertex_set.hpp"

namespace tdc {

struct NamedSet {
    std::string name;
    VertexSet set;
};

/// Explicit total dominator coloring of C_n(1,3) with formula_tdc(n) classes.
struct ConstructionPlan {
    int n = 0;
    int k = 0;
    int residue = 0;
    /// {8i+1, 8i+2 : 0 <= i < k}
    VertexSet packing_L;
    /// The A_1..A_6 sets the residue case uses, in listing order.
    std::vector<NamedSet> tail_sets;
    VertexSet odd;
    VertexSet even;
    /// Vertices that the parity leftovers would also contain when the set
    /// expressions are read as plain unions; they stay only in the class that
    /// names them explicitly.
    std::vector<int> reassigned;
    Coloring classes;
};

namespace detail {

inline Coloring small_table(int n) {
    switch (n) {
        case 7: return Coloring(7, std::vector<std::vector<int>>{{1}, {2, 7}, {3, 5}, {4, 6}});
        case 8: return Coloring(8, std::vector<std::vector<int>>{{1, 3, 5, 7}, {2, 4, 6, 8}});
        case 9: return Coloring(9, std::vector<std::vector<int>>{{1, 8}, {2, 9}, {3, 5, 7}, {4, 6}});
        case 10: return Coloring(10, std::vector<std::vector<int>>{{1}, {2}, {3, 5, 7, 9}, {4, 6, 8, 10}});
        case 11:
            return Coloring(11, std::vector<std::vector<int>>{{1, 3, 5}, {2, 11}, {7, 9}, {8, 10}, {4, 6}});
        default: throw std::logic_error("no table entry for n=" + std::to_string(n));
    }
}

}  // namespace detail

inline ConstructionPlan construct_tdc(int n) {
    if (n < 6) throw InvalidInput("construction needs n >= 6, got " + std::to_string(n));

    const int k = n / 8;
    const int r = n % 8;
    VertexSet L(n), O(n), E(n);
    for (int i = 0; i < k; ++i) {
        L.insert(8 * i + 1);
        L.insert(8 * i + 2);
    }
    for (int v = 1; v <= n; ++v) (v % 2 ? O : E).insert(v);

    if (n <= 11) {
        Coloring c = n == 6 ? Coloring(6, std::vector<VertexSet>{O, E}) : detail::small_table(n);
        return ConstructionPlan{n, k, r, L, {}, O, E, {}, std::move(c)};
    }

    auto set = [n](std::initializer_list<int> offsets) {
        VertexSet s(n);
        for (int d : offsets) s.insert(n - d);
        return s;
    };
    const VertexSet A1 = set({6, 4, 2, 0});
    const VertexSet A2 = set({7, 5, 3, 1});
    const VertexSet A3 = set({6, 4, 2});
    const VertexSet A4 = set({7, 5, 3});
    const VertexSet A5 = set({6, 4});
    const VertexSet A6 = set({7, 5});
    const VertexSet none(n);

    // Per residue: explicit classes after the singletons, what the odd
    // leftover excludes / gains, and what the even leftover excludes / gains.
    struct Case {
        std::vector<NamedSet> explicit_classes;
        VertexSet odd_minus, odd_plus, even_minus, even_plus;
    };
    Case c;
    switch (r) {
        case 0: c = {{}, none, none, none, none}; break;
        case 1: c = {{{"A_1", A1}}, A1, none, none, none}; break;
        case 2: c = {{{"A_1", A1}, {"A_2", A2}}, A2, none, A1, none}; break;
        case 3: c = {{{"A_2", A2}, {"A_3", A3}}, A3, none, A2, set({0})}; break;
        case 4: c = {{{"A_3", A3}, {"A_4", A4}}, A4, none, A3, none}; break;
        case 5: c = {{{"A_4", A4}, {"A_5", A5}}, A5, set({1}), A4, set({2, 0})}; break;
        case 6: c = {{{"A_5", A5}, {"A_6", A6}}, A6, none, A5, none}; break;
        case 7: c = {{{"{n-6}", set({6})}, {"A_6", A6}}, none, set({3, 1}), A6, set({4, 2, 0})}; break;
    }

    VertexSet claimed = L;
    for (const auto& s : c.explicit_classes) claimed |= s.set;

    VertexSet odd_literal = (O - (L | c.odd_minus)) | c.odd_plus;
    VertexSet even_literal = (E - (L | c.even_minus)) | c.even_plus;
    VertexSet odd_class = odd_literal - claimed - c.even_plus;
    VertexSet even_class = even_literal - claimed - c.odd_plus;
    VertexSet reassigned = (odd_literal - odd_class) | (even_literal - even_class);

    std::vector<VertexSet> classes;
    L.for_each([&](int v) { classes.emplace_back(n, std::initializer_list<int>{v}); });
    for (const auto& s : c.explicit_classes) classes.push_back(s.set);
    classes.push_back(odd_class);
    classes.push_back(even_class);
    for (const auto& cls : classes)
        if (cls.empty()) throw std::logic_error("construction for n=" + std::to_string(n) + " has an empty class");

    std::vector<NamedSet> tails;
    for (const auto& s : c.explicit_classes)
        if (s.name.rfind("A_", 0) == 0) tails.push_back(s);

    return ConstructionPlan{n, k, r, L, std::move(tails), O, E, reassigned.to_vector(),
                            Coloring(n, std::move(classes))};
}

struct ConstructionVerdict {
    ConstructionPlan plan;
    ColoringReport report;
    int expected_classes = 0;
    bool packing_ok = false;

    bool ok() const {
        return report.tdc && plan.classes.num_classes() == expected_classes && packing_ok;
    }
};

/// Runs is_tdc on construct_tdc(n) and compares the class count with formula_tdc(n).
inline ConstructionVerdict verify_construction(int n) {
    ConstructionVerdict v{construct_tdc(n), {}, formula_tdc(n), false};
    auto g = standard_graph(n);
    v.report = is_tdc(g, v.plan.classes);
    v.packing_ok = is_open_packing(g, v.plan.packing_L);
    return v;
}

/// Classes in set notation, one per line: "{1,3,5,7}".
inline std::string format_classes(const Coloring& c, const std::string& sep = "\n") {
    std::string out;
    for (const auto& cls : c.classes()) {
        if (!out.empty()) out += sep;
        out += cls.to_string();
    }
    return out;
}

}  // namespace tdc
