#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/constructions.hpp"
#include "tdc/detail/mask_graph.hpp"
#include "tdc/errors.hpp"
#include "tdc/invariants.hpp"
#include "tdc/limits.hpp"

namespace tdc {

/// Per-color-count search limits. Whichever runs out first ends the search.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds max_time{300'000};
};

enum class Feasibility { feasible, infeasible, budget_exceeded };

inline const char* to_string(Feasibility f) {
    switch (f) {
        case Feasibility::feasible: return "feasible";
        case Feasibility::infeasible: return "infeasible";
        case Feasibility::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

struct FeasibilityResult {
    int colors = 0;
    Feasibility status = Feasibility::infeasible;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

namespace detail {

/// Depth-first search for a TDC with at most `colors` classes.
///
/// Vertices are colored in label order and colors are opened in first-use
/// order. For every used class c, pot[c] is the set of vertices adjacent to
/// all current members; it only shrinks as c grows, so a vertex outside every
/// pot[c] must be served by a class not opened yet, which needs an uncolored
/// neighbor. Vertices that need fresh classes and share no uncolored neighbor
/// need distinct fresh classes.
class TdcSearch {
public:
    TdcSearch(const CirculantGraph& g, int colors, const Budget& budget)
        : m_(g), colors_(colors), budget_(budget),
          members_(static_cast<std::size_t>(colors), 0), pot_(static_cast<std::size_t>(colors), 0),
          color_(static_cast<std::size_t>(g.n()), -1) {}

    FeasibilityResult run() {
        start_ = std::chrono::steady_clock::now();
        FeasibilityResult r;
        r.colors = colors_;
        bool found = dfs(0, 0, m_.all());
        r.nodes = nodes_;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (found) {
            r.status = Feasibility::feasible;
            r.witness = Coloring::from_colors(color_);
        } else {
            r.status = aborted_ ? Feasibility::budget_exceeded : Feasibility::infeasible;
        }
        return r;
    }

private:
    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) return aborted_ = true;
        if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_time)
            return aborted_ = true;
        return false;
    }

    bool viable(int used, Mask uncolored) const {
        Mask covered = 0;
        for (int c = 0; c < used; ++c) covered |= pot_[static_cast<std::size_t>(c)];
        Mask needy = m_.all() & ~covered;
        if (needy == 0) return true;
        const int fresh = colors_ - used;
        if (fresh == 0) return false;
        if (popcount(needy) > fresh * m_.max_degree) return false;
        int distinct = 0;
        Mask taken = 0;
        for (Mask rest = needy; rest != 0; rest &= rest - 1) {
            Mask room = m_[lowest(rest)] & uncolored;
            if (room == 0) return false;
            if ((room & taken) == 0) {
                if (++distinct > fresh) return false;
                taken |= room;
            }
        }
        return true;
    }

    bool dfs(int v, int used, Mask uncolored) {
        if (v == m_.n) return true;
        const Mask nv = m_[v];
        const Mask rest = uncolored & ~bit(v);
        const int open_limit = std::min(colors_, used + 1);
        for (int c = 0; c < open_limit; ++c) {
            auto& mem = members_[static_cast<std::size_t>(c)];
            if ((mem & nv) != 0) continue;
            ++nodes_;
            if (out_of_budget()) return false;

            auto& pot = pot_[static_cast<std::size_t>(c)];
            const Mask saved_pot = pot;
            pot = (c == used) ? nv : (pot & nv);
            mem |= bit(v);
            color_[static_cast<std::size_t>(v)] = c;
            const int now_used = std::max(used, c + 1);

            if (viable(now_used, rest) && dfs(v + 1, now_used, rest)) return true;

            mem &= ~bit(v);
            pot = saved_pot;
            color_[static_cast<std::size_t>(v)] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    MaskGraph m_;
    int colors_;
    Budget budget_;
    std::vector<Mask> members_;
    std::vector<Mask> pot_;
    std::vector<int> color_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Decides whether g has a TDC with at most `colors` nonempty classes.
/// Budget exhaustion is reported as its own outcome.
inline FeasibilityResult tdc_feasible(const CirculantGraph& g, int colors, const Budget& budget = {},
                                      int limit = Limits::kDefaultSolver) {
    if (colors < 1 || colors > g.n())
        throw InvalidInput("color count must be in 1.." + std::to_string(g.n()) + ", got " +
                           std::to_string(colors));
    require_within("tdc search", g.n(), limit);
    return detail::TdcSearch(g, colors, budget).run();
}

struct Bound {
    int value = 0;
    std::string provenance;
};

enum class SearchStatus { exact, budget_exceeded, bound_violated };

inline const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::exact: return "exact";
        case SearchStatus::budget_exceeded: return "budget_exceeded";
        case SearchStatus::bound_violated: return "bound_violated";
    }
    return "?";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::exact;
    /// Set only when status is exact.
    std::optional<int> chi_dt;
    std::optional<Coloring> witness;
    int chromatic = 0;
    int total_domination = 0;
    Bound lower_bound_used;
    Bound upper_bound_used;
    /// chi_d^t is known to lie in [bracket_low, bracket_high].
    int bracket_low = 0;
    int bracket_high = 0;
    std::vector<FeasibilityResult> levels;
    std::uint64_t nodes_explored = 0;
    double elapsed = 0.0;
};

/// Exact chi_d^t: tests color counts from max(chi, gamma_t) upward until one is
/// feasible. Every count below the answer is proven infeasible individually.
inline SearchOutcome tdc_number_exact(const CirculantGraph& g, const Budget& budget = {},
                                      int limit = Limits::kDefaultSolver) {
    require_within("tdc search", g.n(), limit);
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) == 0) throw InvalidInput("graph has an isolated vertex");

    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.chromatic = *chromatic_number_oracle(g, limit).oracle;
    out.total_domination = *total_domination_number_oracle(g, limit).oracle;

    if (out.chromatic >= out.total_domination)
        out.lower_bound_used = {out.chromatic, "chromatic"};
    else
        out.lower_bound_used = {out.total_domination, "total_domination"};
    out.upper_bound_used = {out.chromatic + out.total_domination, "total_domination+chromatic"};
    if (g.is_standard() && g.n() >= 6) {
        auto v = verify_construction(g.n());
        if (v.ok() && v.plan.classes.num_classes() < out.upper_bound_used.value)
            out.upper_bound_used = {v.plan.classes.num_classes(), "construction"};
    }

    out.bracket_low = out.lower_bound_used.value;
    out.bracket_high = out.upper_bound_used.value;
    for (int colors = out.lower_bound_used.value; colors <= out.upper_bound_used.value; ++colors) {
        auto r = tdc_feasible(g, colors, budget, limit);
        out.nodes_explored += r.nodes;
        out.levels.push_back(r);
        if (r.status == Feasibility::infeasible) {
            out.bracket_low = colors + 1;
            continue;
        }
        if (r.status == Feasibility::budget_exceeded) {
            out.status = SearchStatus::budget_exceeded;
            break;
        }
        out.status = SearchStatus::exact;
        out.chi_dt = colors;
        out.witness = r.witness;
        out.bracket_high = colors;
        break;
    }
    if (out.status == SearchStatus::exact && !out.chi_dt) out.status = SearchStatus::bound_violated;
    out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace tdc
