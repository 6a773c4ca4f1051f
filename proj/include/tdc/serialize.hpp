#pragma once

#include "json.hpp"

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/constructions.hpp"
#include "tdc/formulas.hpp"
#include "tdc/invariants.hpp"
#include "tdc/solver.hpp"

// nlohmann::json conversions for the report types. Found by ADL.

namespace tdc {

inline void to_json(nlohmann::json& j, const VertexSet& s) { j = s.to_vector(); }

inline void to_json(nlohmann::json& j, const Coloring& c) { j = c.to_lists(); }

inline void to_json(nlohmann::json& j, const ColoringReport& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"members", c.members},
                           {"size", c.size},
                           {"common_neighborhood", c.common_neighborhood},
                           {"cn_size", c.cn_size}});
    j = {{"n", r.n},
         {"proper", r.proper},
         {"tdc", r.tdc},
         {"num_classes", r.classes.size()},
         {"cn_total", r.cn_total()},
         {"classes", classes},
         {"uncovered", r.uncovered}};
}

inline void to_json(nlohmann::json& j, const ReductionResult& r) {
    j = {{"n", r.n},         {"a", r.a},
         {"b", r.b},         {"a_inverse", r.a_inverse},
         {"raw_c", r.raw_c}, {"standard_c", r.standard_c},
         {"vertex_map", r.vertex_map}};
}

inline void to_json(nlohmann::json& j, const InvariantValue& v) {
    j = {{"name", to_string(v.name)}};
    j["closed_form"] = v.closed_form ? nlohmann::json(*v.closed_form) : nlohmann::json(nullptr);
    j["oracle"] = v.oracle ? nlohmann::json(*v.oracle) : nlohmann::json(nullptr);
    j["agree"] = v.agree ? nlohmann::json(*v.agree) : nlohmann::json(nullptr);
    if (v.witness) j["witness"] = *v.witness;
    if (v.witness_coloring) j["witness"] = *v.witness_coloring;
}

inline void to_json(nlohmann::json& j, const ConstructionPlan& p) {
    nlohmann::json tails = nlohmann::json::object();
    for (const auto& t : p.tail_sets) tails[t.name] = t.set;
    j = {{"n", p.n},
         {"k", p.k},
         {"residue", p.residue},
         {"packing_L", p.packing_L},
         {"tail_sets", tails},
         {"reassigned", p.reassigned},
         {"classes", p.classes}};
}

inline void to_json(nlohmann::json& j, const FeasibilityResult& r) {
    j = {{"colors", r.colors}, {"status", to_string(r.status)}, {"nodes", r.nodes}, {"seconds", r.seconds}};
}

inline void to_json(nlohmann::json& j, const SearchOutcome& o) {
    j = {{"status", to_string(o.status)},
         {"chi_dt", o.chi_dt ? nlohmann::json(*o.chi_dt) : nlohmann::json(nullptr)},
         {"chromatic", o.chromatic},
         {"total_domination", o.total_domination},
         {"lower_bound", {{"value", o.lower_bound_used.value}, {"provenance", o.lower_bound_used.provenance}}},
         {"upper_bound", {{"value", o.upper_bound_used.value}, {"provenance", o.upper_bound_used.provenance}}},
         {"bracket", {o.bracket_low, o.bracket_high}},
         {"levels", o.levels},
         {"nodes_explored", o.nodes_explored},
         {"elapsed", o.elapsed}};
    if (o.witness) j["witness"] = *o.witness;
}

inline void to_json(nlohmann::json& j, const FormulaRow& r) {
    j = {{"n", r.n},         {"chi_dt", r.chi_dt},
         {"gamma_t", r.gamma_t}, {"alpha", r.alpha},
         {"rho", r.rho},     {"corollary_offset", r.offset},
         {"offset_consistent", r.offset_consistent}};
}

inline void to_json(nlohmann::json& j, const OpenPackingStructure& s) {
    auto shape = [](const PackingShape& p) {
        return nlohmann::json{{"packing", p.packing}, {"edges", p.edges}, {"isolated", p.isolated}};
    };
    nlohmann::json bad = nlohmann::json::array();
    for (const auto& p : s.violations) bad.push_back(shape(p));
    j = {{"n", s.n},
         {"rho", s.rho},
         {"expected_edges", s.expected_edges},
         {"expected_isolated", s.expected_isolated},
         {"packings", s.packings.size()},
         {"holds", s.holds()},
         {"violations", bad}};
}

}  // namespace tdc
