// Acceptance checks. Usage: acceptance [criterion...]; with no arguments all six run.
// Prints one PASS/FAIL line per criterion followed by indented details on failure.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tdc/constructions.hpp"
#include "tdc/formulas.hpp"
#include "tdc/observations.hpp"
#include "tdc/solver.hpp"

namespace {

using namespace tdc;

struct Result {
    std::string title;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

constexpr std::size_t kMaxShown = 12;

void fail(Result& r, const std::string& msg) { r.failures.push_back(msg); }

Result exact_matches_formula() {
    Result r{"exact chi_d^t equals formula_tdc for n=6..18", {}, {}};
    for (int n = 6; n <= 18; ++n) {
        auto s = tdc_number_exact(standard_graph(n));
        std::ostringstream os;
        os << "n=" << n << " formula=" << formula_tdc(n);
        if (s.status != SearchStatus::exact) {
            os << " search " << to_string(s.status) << " bracket [" << s.bracket_low << "," << s.bracket_high << "]";
            fail(r, os.str());
            continue;
        }
        os << " exact=" << *s.chi_dt;
        if (*s.chi_dt != formula_tdc(n)) {
            os << " witness " << format_classes(*s.witness, " ");
            fail(r, os.str());
        }
    }
    return r;
}

Result constructions_verify() {
    Result r{"construct_tdc verified as a TDC of formula size for n=6..1000", {}, {}};
    for (int n = 6; n <= 1000; ++n) {
        auto v = verify_construction(n);
        if (v.ok()) continue;
        std::ostringstream os;
        os << "n=" << n << " tdc=" << v.report.tdc << " classes=" << v.plan.classes.num_classes()
           << " expected=" << v.expected_classes << " packing_ok=" << v.packing_ok;
        fail(r, os.str());
    }
    return r;
}

Result oracles_match_formulas() {
    Result r{"oracles equal closed forms: alpha n=4..24, rho n=3..24, gamma_t n=4..24", {}, {}};
    for (int n = 3; n <= 24; ++n) {
        auto g = standard_graph(n);
        auto report = [&](const InvariantValue& v) {
            if (v.agree && *v.agree) return;
            std::ostringstream os;
            os << to_string(v.name) << " n=" << n << " oracle=" << *v.oracle << " closed_form=" << *v.closed_form
               << " witness " << v.witness->to_string();
            fail(r, os.str());
        };
        report(open_packing_number_oracle(g));
        if (n >= 4) {
            report(independence_number_oracle(g));
            report(total_domination_number_oracle(g));
        }
    }
    return r;
}

Result observation_suites() {
    Result r{"observation suites: capacity, common neighbors, packing shape, mixed parity, large class", {}, {}};

    constexpr std::uint64_t kSeed = 20240601;
    for (int n = 9; n <= 16; ++n) {
        auto g = standard_graph(n);
        for (std::uint64_t s = 0; s < 500; ++s) {
            auto c = random_greedy_coloring(g, kSeed + s);
            if (!class_size_capacity_check(g, c))
                fail(r, "capacity n=" + std::to_string(n) + " seed=" + std::to_string(kSeed + s));
        }
    }
    r.notes.push_back("capacity: 500 seeded proper colorings for each n=9..16");

    for (int n = 13; n <= 20; ++n) {
        auto c = check_common_neighbor_sizes(n);
        if (!c.holds())
            fail(r, "common neighbors n=" + std::to_string(n) + " pair violations=" +
                        std::to_string(c.pair_violations) + " triple violations=" + std::to_string(c.triple_violations));
    }

    for (int n = 7; n <= 20; ++n) {
        auto s = max_open_packing_structure(standard_graph(n));
        if (s.holds()) continue;
        const auto& p = s.violations.front();
        std::ostringstream os;
        os << "packing shape n=" << n << ": " << s.violations.size() << " of " << s.packings.size()
           << " maximum packings differ from " << s.expected_edges << " edge(s) + " << s.expected_isolated
           << " isolated, e.g. " << p.packing.to_string() << " with " << p.edges << " edge(s) + " << p.isolated
           << " isolated";
        fail(r, os.str());
    }

    for (int n = 8; n <= 16; n += 2) {
        int m = max_mixed_parity_independent_set(standard_graph(n));
        if (m > n / 2 - 3)
            fail(r, "mixed parity n=" + std::to_string(n) + " size " + std::to_string(m) + " > " +
                        std::to_string(n / 2 - 3));
    }

    int checked = 0;
    for (int n : {18, 20}) {
        auto g = standard_graph(n);
        for (int parity = 0; parity < 2; ++parity) {
            std::vector<int> side;
            for (int v = 1; v <= n; ++v)
                if (v % 2 == parity) side.push_back(v);
            const int k = static_cast<int>(side.size());
            for (int mask = 0; mask < (1 << k); ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) < n / 2 - 2) continue;
                VertexSet big(n);
                for (int i = 0; i < k; ++i)
                    if (mask >> i & 1) big.insert(side[static_cast<std::size_t>(i)]);
                for (std::uint64_t seed = 0; seed < 5; ++seed) {
                    ++checked;
                    auto c = coloring_with_class(g, big, kSeed + seed);
                    if (is_tdc(g, c).tdc) fail(r, "large class n=" + std::to_string(n) + " " + format_classes(c, " "));
                }
            }
        }
    }
    r.notes.push_back("large class: " + std::to_string(checked) + " colorings for n=18,20");
    return r;
}

Result reductions_are_isomorphisms() {
    Result r{"reduce_to_standard yields an isomorphism for n=6..16, gcd(a,n)=1, 1<=a,b<n", {}, {}};
    int pairs = 0;
    for (int n = 6; n <= 16; ++n)
        for (int a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            for (int b = 1; b < n; ++b) {
                ++pairs;
                auto red = reduce_to_standard(n, a, b);
                auto g1 = build_circulant(n, {a, b}, GeneratorPolicy::merge);
                auto g2 = build_circulant(n, {1, red.standard_c}, GeneratorPolicy::merge);
                if (!verify_isomorphism(g1, g2, red.vertex_map))
                    fail(r, "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
            }
        }
    r.notes.push_back(std::to_string(pairs) + " pairs");
    return r;
}

Result offset_matches_difference() {
    Result r{"corollary_offset(n) == formula_tdc(n) - gamma_t formula for n=6..10^6", {}, {}};
    for (int n = 6; n <= 1'000'000; ++n) {
        int off = corollary_offset(n);
        int diff = formula_tdc(n) - total_domination_number_formula(n);
        if (off != diff)
            fail(r, "n=" + std::to_string(n) + " offset=" + std::to_string(off) + " difference=" + std::to_string(diff));
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Result()>> criteria = {exact_matches_formula,      constructions_verify,
                                                           oracles_match_formulas,     observation_suites,
                                                           reductions_are_isomorphisms, offset_matches_difference};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > static_cast<int>(criteria.size())) {
            std::cerr << "unknown criterion: " << argv[i] << "\n";
            return 1;
        }
        selected.push_back(k);
    }
    if (selected.empty()) {
        selected.resize(criteria.size());
        std::iota(selected.begin(), selected.end(), 1);
    }

    int failed = 0;
    for (int k : selected) {
        Result r = criteria[static_cast<std::size_t>(k - 1)]();
        bool ok = r.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << r.title << "\n";
        for (const auto& note : r.notes) std::cout << "    " << note << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < kMaxShown; ++i)
            std::cout << "    " << r.failures[i] << "\n";
        if (r.failures.size() > kMaxShown)
            std::cout << "    ... " << r.failures.size() - kMaxShown << " more\n";
    }
    return failed == 0 ? 0 : 2;
}
