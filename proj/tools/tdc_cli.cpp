// Command-line front end: formulas, constructions, exact search, invariants,
// coloring verification and sweeps for total dominator colorings of circulants.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tdc/circulant.hpp"
#include "tdc/coloring.hpp"
#include "tdc/coloring_io.hpp"
#include "tdc/constructions.hpp"
#include "tdc/formulas.hpp"
#include "tdc/invariants.hpp"
#include "tdc/observations.hpp"
#include "tdc/serialize.hpp"
#include "tdc/solver.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;
constexpr std::uint64_t kDefaultSeed = 20240601;

enum class Format { text, json, csv };

struct Output {
    Format format = Format::text;
    std::string command;
    json results = json::array();
    json summary = json::object();
    bool disagreement = false;
    std::ostringstream text;
    std::string csv;

    int finish() {
        summary["all_agree"] = !disagreement;
        if (format == Format::json) {
            json doc = {{"version", kVersion}, {"command", command}, {"results", results}, {"summary", summary}};
            std::cout << doc.dump(2) << "\n";
        } else if (format == Format::csv) {
            std::cout << csv;
        } else {
            std::cout << text.str();
        }
        return disagreement ? kExitDisagree : kExitOk;
    }
};

json claim(const char* quantity, int value, const char* source) {
    return {{"quantity", quantity}, {"value", value}, {"source", source}};
}

struct GraphSpec {
    std::vector<int> ints;
    std::string set;

    bool standard() const { return set.empty() && ints.size() == 1; }

    tdc::CirculantGraph build() const {
        if (!set.empty()) {
            if (ints.size() != 1) throw tdc::InvalidInput("--set needs exactly one vertex count");
            std::vector<int> gens;
            std::stringstream ss(set);
            for (std::string tok; std::getline(ss, tok, ',');) {
                try {
                    gens.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw tdc::InvalidInput("bad generator '" + tok + "' in --set");
                }
            }
            return tdc::build_circulant(ints[0], gens);
        }
        if (ints.size() == 1) return tdc::standard_graph(ints[0]);
        if (ints.size() == 3) return tdc::build_circulant(ints[0], {ints[1], ints[2]});
        throw tdc::InvalidInput("graph is given as 'n' or 'n a b'");
    }
};

tdc::Budget make_budget(std::uint64_t nodes, double seconds) {
    tdc::Budget b;
    b.max_nodes = nodes;
    b.max_time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0));
    return b;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// --------------------------------------------------------------------------

int run_chidt(Output& out, const std::vector<int>& args, bool exact, bool construct, const tdc::Budget& budget,
              const tdc::Limits& limits) {
    if (args.size() != 1 && args.size() != 3) throw tdc::InvalidInput("chidt takes 'n' or 'n a b'");
    const int n = args[0];
    json row = {{"n", n}};
    json claims = json::array();

    int formula = 0;
    std::optional<tdc::CirculantGraph> graph;
    std::optional<tdc::ReductionResult> reduction;
    if (args.size() == 3) {
        auto gen = tdc::formula_tdc_general_checked(n, args[1], args[2]);
        formula = gen.value;
        reduction = gen.reduction;
        row["reduction"] = gen.reduction;
        row["congruence"] = gen.held == tdc::Congruence::three ? "3" : "n-3";
        out.text << "C_" << n << "(" << args[1] << "," << args[2] << ") ~ C_" << n << "(1,"
                 << gen.reduction.standard_c << ") via x -> " << gen.reduction.a_inverse << "x mod " << n
                 << " (a^-1 b = " << (gen.held == tdc::Congruence::three ? "3" : "n-3") << ")\n";
        graph = tdc::build_circulant(n, {args[1], args[2]});
    } else {
        formula = tdc::formula_tdc(n);
        graph = tdc::standard_graph(n);
    }
    claims.push_back(claim("chi_dt", formula, "formula"));
    out.text << "n=" << n << "  formula chi_d^t = " << formula << "\n";
    bool agree = true;
    std::string csv_construction, csv_exact;

    if (construct) {
        auto v = tdc::verify_construction(n);
        tdc::Coloring classes = v.plan.classes;
        bool tdc_ok = v.report.tdc;
        if (reduction) {
            const auto color = classes.color_of();
            std::vector<std::vector<int>> pulled(static_cast<std::size_t>(classes.num_classes()));
            for (int x = 1; x <= n; ++x)
                pulled[static_cast<std::size_t>(color[static_cast<std::size_t>(reduction->map(x) - 1)])].push_back(x);
            classes = tdc::Coloring(n, pulled);
            tdc_ok = tdc::is_tdc(*graph, classes).tdc;
        }
        claims.push_back(claim("chi_dt", classes.num_classes(), "construction"));
        row["construction"] = {{"tdc", tdc_ok}, {"classes", classes}, {"ok", v.ok() && tdc_ok}};
        out.text << "construction: " << classes.num_classes() << " classes, tdc "
                 << (tdc_ok ? "verified" : "FAILED") << " on " << graph->name() << "\n"
                 << tdc::format_classes(classes) << "\n";
        agree = agree && v.ok() && tdc_ok;
        csv_construction = std::to_string(v.plan.classes.num_classes());
    }
    if (exact) {
        auto o = tdc::tdc_number_exact(*graph, budget, limits.solver);
        row["exact"] = o;
        if (o.chi_dt) {
            claims.push_back(claim("chi_dt", *o.chi_dt, "exact-search"));
            out.text << "exact search: chi_d^t = " << *o.chi_dt << " (" << o.nodes_explored << " nodes, "
                     << o.elapsed << " s)\n";
            agree = agree && *o.chi_dt == formula;
            csv_exact = std::to_string(*o.chi_dt);
        } else {
            out.text << "exact search: " << tdc::to_string(o.status) << ", chi_d^t in [" << o.bracket_low << ", "
                     << o.bracket_high << "]\n";
            agree = false;
        }
    }
    row["claims"] = claims;
    row["agree"] = agree;
    out.text << (agree ? "agree" : "DISAGREE") << "\n";
    out.csv = "n,formula,construction,exact,agree\n" + std::to_string(n) + "," + std::to_string(formula) + "," +
              csv_construction + "," + csv_exact + "," + (agree ? "true" : "false") + "\n";
    out.results.push_back(row);
    out.disagreement = !agree;
    return out.finish();
}

int run_sweep(Output& out, int from, int to, int exact_up_to, const tdc::Budget& budget,
              const tdc::Limits& limits) {
    if (from < 6 || to < from) throw tdc::InvalidInput("sweep needs 6 <= from <= to");
    int verified = 0, exact_runs = 0, failures = 0;
    out.csv = "n,formula,construction_classes,construction_tdc,exact,agree\n";
    for (int n = from; n <= to; ++n) {
        int formula = tdc::formula_tdc(n);
        auto v = tdc::verify_construction(n);
        json claims = json::array({claim("chi_dt", formula, "formula"),
                                   claim("chi_dt", v.plan.classes.num_classes(), "construction")});
        bool agree = v.ok();
        if (v.ok()) ++verified;
        std::string exact_col;
        if (n <= exact_up_to) {
            ++exact_runs;
            auto o = tdc::tdc_number_exact(tdc::standard_graph(n), budget, limits.solver);
            if (o.chi_dt) {
                claims.push_back(claim("chi_dt", *o.chi_dt, "exact-search"));
                exact_col = std::to_string(*o.chi_dt);
                agree = agree && *o.chi_dt == formula;
            } else {
                exact_col = "[" + std::to_string(o.bracket_low) + "-" + std::to_string(o.bracket_high) + "]";
                agree = false;
            }
        }
        if (!agree) ++failures;
        out.results.push_back({{"n", n},
                               {"claims", claims},
                               {"construction_tdc", v.report.tdc},
                               {"agree", agree}});
        out.text << "n=" << n << "  formula=" << formula << "  construction=" << v.plan.classes.num_classes()
                 << (v.report.tdc ? " (tdc)" : " (NOT tdc)");
        if (!exact_col.empty()) out.text << "  exact=" << exact_col;
        out.text << (agree ? "" : "  DISAGREE") << "\n";
        out.csv += std::to_string(n) + "," + std::to_string(formula) + "," +
                   std::to_string(v.plan.classes.num_classes()) + "," + (v.report.tdc ? "true" : "false") + "," +
                   exact_col + "," + (agree ? "true" : "false") + "\n";
    }
    int rows = to - from + 1;
    out.summary = {{"rows", rows}, {"constructions_verified", verified}, {"exact_runs", exact_runs},
                   {"disagreements", failures}};
    out.text << rows << " rows, " << verified << " constructions verified, " << exact_runs << " exact runs, "
             << failures << " disagreements\n";
    out.disagreement = failures > 0;
    return out.finish();
}

int run_invariants(Output& out, const GraphSpec& spec, bool oracle, const tdc::Limits& limits) {
    auto g = spec.build();
    const int n = g.n();
    // Closed forms only exist for graphs isomorphic to C_n(1,3).
    bool standard_iso = g.is_standard();
    if (!standard_iso && spec.set.empty() && spec.ints.size() == 3) {
        try {
            auto r = tdc::reduce_to_standard(n, spec.ints[1], spec.ints[2]);
            standard_iso = r.standard_c == 3;
        } catch (const tdc::InvalidInput&) {
        }
    }
    out.text << g.name() << "\n";
    json row = {{"n", n}, {"graph", g.name()}};
    json values = json::array();
    bool agree = true;

    struct Entry {
        tdc::Invariant which;
        int min_n;
        int (*formula)(int);
        tdc::InvariantValue (*oracle)(const tdc::CirculantGraph&, int);
    };
    const Entry entries[] = {
        {tdc::Invariant::independence, 4, tdc::independence_number_formula, tdc::independence_number_oracle},
        {tdc::Invariant::open_packing, 3, tdc::open_packing_number_formula, tdc::open_packing_number_oracle},
        {tdc::Invariant::total_domination, 4, tdc::total_domination_number_formula,
         tdc::total_domination_number_oracle},
    };
    for (const auto& e : entries) {
        tdc::InvariantValue v;
        v.name = e.which;
        if (standard_iso && n >= e.min_n) v.closed_form = e.formula(n);
        json j = json::object();
        if (oracle) {
            try {
                auto o = e.oracle(g, limits.oracle);
                v.oracle = o.oracle;
                v.witness = o.witness;
                v.settle();
            } catch (const tdc::LimitExceeded& ex) {
                j["oracle_refused"] = ex.what();
            }
        }
        json vj = v;
        vj.update(j);
        json claims = json::array();
        if (v.closed_form) claims.push_back(claim(to_string(e.which), *v.closed_form, "formula"));
        if (v.oracle) claims.push_back(claim(to_string(e.which), *v.oracle, "oracle"));
        vj["claims"] = claims;
        values.push_back(vj);

        out.text << "  " << to_string(e.which) << ": ";
        out.text << "formula=" << (v.closed_form ? std::to_string(*v.closed_form) : "-");
        if (oracle) {
            if (v.oracle)
                out.text << "  oracle=" << *v.oracle << "  witness=" << v.witness->to_string();
            else
                out.text << "  oracle refused (n > limit " << limits.oracle << ")";
        }
        if (v.agree) out.text << (*v.agree ? "  agree" : "  DISAGREE");
        out.text << "\n";
        if (v.agree && !*v.agree) agree = false;
    }
    if (oracle) {
        try {
            auto chi = tdc::chromatic_number_oracle(g, limits.oracle);
            json cj = chi;
            cj["claims"] = json::array({claim("chromatic", *chi.oracle, "oracle")});
            values.push_back(cj);
            out.text << "  chromatic: oracle=" << *chi.oracle << "\n";
        } catch (const tdc::LimitExceeded& ex) {
            values.push_back({{"name", "chromatic"}, {"oracle_refused", ex.what()}});
            out.text << "  chromatic: oracle refused (n > limit " << limits.oracle << ")\n";
        }
    }
    row["invariants"] = values;
    row["agree"] = agree;
    out.results.push_back(row);
    out.disagreement = !agree;
    return out.finish();
}

int run_verify(Output& out, const GraphSpec& spec, const std::string& path) {
    auto g = spec.build();
    std::ifstream in(path);
    if (!in) throw tdc::InvalidInput("cannot open coloring file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    tdc::Coloring c(g.n(), tdc::parse_coloring(buf.str()));
    auto r = tdc::is_tdc(g, c);
    out.results.push_back(r);
    out.text << g.name() << ", " << c.num_classes() << " classes\n";
    for (const auto& cls : r.classes)
        out.text << "  " << cls.members.to_string() << "  size=" << cls.size
                 << "  CN=" << cls.common_neighborhood.to_string() << " (" << cls.cn_size << ")\n";
    out.text << "proper: " << (r.proper ? "yes" : "no") << "\n"
             << "uncovered: " << (r.uncovered.empty() ? "none" : join(r.uncovered)) << "\n"
             << "tdc: " << (r.tdc ? "true" : "false") << "\n";
    out.summary = {{"tdc", r.tdc}};
    out.disagreement = !r.tdc;
    return out.finish();
}

int run_construct(Output& out, int n) {
    auto v = tdc::verify_construction(n);
    json row = v.plan;
    row["tdc"] = v.report.tdc;
    row["expected_classes"] = v.expected_classes;
    row["claims"] = json::array({claim("chi_dt", v.plan.classes.num_classes(), "construction")});
    row["agree"] = v.ok();
    out.results.push_back(row);
    out.text << "C_" << n << "(1,3): " << v.plan.classes.num_classes() << " classes (formula "
             << v.expected_classes << "), tdc " << (v.report.tdc ? "verified" : "FAILED") << "\n"
             << tdc::format_classes(v.plan.classes) << "\n";
    if (!v.plan.reassigned.empty())
        out.text << "reassigned from parity leftovers: " << join(v.plan.reassigned) << "\n";
    out.disagreement = !v.ok();
    return out.finish();
}

int run_reduce(Output& out, int n, int a, int b) {
    auto r = tdc::reduce_to_standard(n, a, b);
    auto g1 = tdc::build_circulant(n, {a, b}, tdc::GeneratorPolicy::merge);
    auto g2 = tdc::build_circulant(n, {1, r.standard_c}, tdc::GeneratorPolicy::merge);
    bool iso = tdc::verify_isomorphism(g1, g2, r.vertex_map);
    json row = r;
    row["isomorphism_verified"] = iso;
    out.results.push_back(row);
    out.text << "C_" << n << "(" << a << "," << b << ") ~ C_" << n << "(1," << r.standard_c << ")\n"
             << "a^-1 = " << r.a_inverse << ", a^-1 b = " << r.raw_c << " (mod " << n << ")\n"
             << "map x -> " << r.a_inverse << "x mod " << n << ": " << join(r.vertex_map) << "\n"
             << "edge preservation: " << (iso ? "verified" : "FAILED") << "\n";
    out.disagreement = !iso;
    return out.finish();
}

int run_table(Output& out, int from, int to) {
    auto t = tdc::FormulaTable::build(from, to);
    out.csv = t.to_csv();
    int inconsistent = 0;
    for (const auto& r : t.rows) {
        json j = r;
        j["claims"] = json::array({claim("chi_dt", r.chi_dt, "formula"), claim("gamma_t", r.gamma_t, "formula")});
        out.results.push_back(j);
        out.text << "n=" << r.n << "  chi_dt=" << r.chi_dt << "  gamma_t=" << r.gamma_t << "  alpha=" << r.alpha
                 << "  rho=" << r.rho << "  offset=" << r.offset << (r.offset_consistent ? "" : "  INCONSISTENT")
                 << "\n";
        if (!r.offset_consistent) ++inconsistent;
    }
    out.summary = {{"rows", t.rows.size()}, {"offset_inconsistent", inconsistent}};
    out.disagreement = inconsistent > 0;
    return out.finish();
}

int run_observe(Output& out, int n, int samples, std::uint64_t seed, const tdc::Limits& limits) {
    auto g = tdc::standard_graph(n);
    json row = {{"n", n}, {"seed", seed}};
    out.text << "C_" << n << "(1,3), seed " << seed << "\n";
    bool ok = true;
    if (n >= 9) {
        int bad = 0;
        for (int s = 0; s < samples; ++s)
            if (!tdc::class_size_capacity_check(g, tdc::random_greedy_coloring(g, seed + static_cast<std::uint64_t>(s))))
                ++bad;
        row["capacity"] = {{"samples", samples}, {"violations", bad}};
        out.text << "  class capacity (v+v'<=5, v>=5 => v'=0): " << bad << "/" << samples << " violations\n";
        ok = ok && bad == 0;
    }
    auto cn = tdc::check_common_neighbor_sizes(n);
    row["common_neighbors"] = {{"pair_violations", cn.pair_violations}, {"triple_violations", cn.triple_violations}};
    out.text << "  pair/triple CN sizes: " << cn.pair_violations << " pair, " << cn.triple_violations
             << " triple violations\n";
    if (n >= 7 && n <= limits.oracle) {
        auto s = tdc::max_open_packing_structure(g, limits.oracle);
        row["packing_structure"] = s;
        out.text << "  maximum open packings: " << s.packings.size() << ", off-shape: " << s.violations.size()
                 << "\n";
        ok = ok && s.holds();
    }
    if (n % 2 == 0 && n >= 8 && n <= limits.oracle) {
        int mixed = tdc::max_mixed_parity_independent_set(g, limits.oracle);
        row["mixed_parity_independent"] = {{"max", mixed}, {"bound", n / 2 - 3}};
        out.text << "  largest mixed-parity independent set: " << mixed << " (bound " << n / 2 - 3 << ")\n";
        ok = ok && mixed <= n / 2 - 3;
    }
    row["holds"] = ok;
    out.results.push_back(row);
    out.disagreement = !ok;
    return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total dominator colorings of circulant graphs C_n(1,3) and C_n(a,b)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    bool as_json = false, as_csv = false;
    app.add_flag("--json", as_json, "Emit a JSON report");
    app.add_flag("--csv", as_csv, "Emit CSV (sweep, table, chidt)");

    std::uint64_t budget_nodes = 100'000'000;
    double budget_seconds = 300.0;
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", budget_nodes, "Search node limit per color count")->capture_default_str();
        sub->add_option("--budget-seconds", budget_seconds, "Time limit per color count")->capture_default_str();
    };

    std::vector<int> chidt_args;
    bool exact = false, construct = false;
    auto* chidt = app.add_subcommand("chidt", "chi_d^t of C_n(1,3), or of C_n(a,b) via reduction");
    chidt->add_option("graph", chidt_args, "n, or n a b")->required()->expected(1, 3);
    chidt->add_flag("--exact", exact, "Also run the exact solver");
    chidt->add_flag("--construct", construct, "Also build and verify the explicit coloring");
    add_budget(chidt);

    int sweep_from = 0, sweep_to = 0, exact_up_to = 0;
    auto* sweep = app.add_subcommand("sweep", "Formula and construction for every n in a range");
    sweep->add_option("from", sweep_from)->required();
    sweep->add_option("to", sweep_to)->required();
    sweep->add_option("--exact-up-to", exact_up_to, "Run the exact solver for n up to this value");
    add_budget(sweep);

    GraphSpec inv_graph;
    bool oracle = false;
    auto* inv = app.add_subcommand("invariants", "alpha, open packing, gamma_t (closed forms and oracles)");
    inv->add_option("graph", inv_graph.ints, "n, or n a b")->required()->expected(1, 3);
    inv->add_option("--set", inv_graph.set, "Arbitrary connection set, e.g. 1,4,5");
    inv->add_flag("--oracle", oracle, "Also run brute-force oracles");

    std::vector<std::string> verify_args;
    std::string verify_set;
    auto* verify = app.add_subcommand("verify-coloring", "Check a coloring file (JSON or class-per-line)");
    verify->add_option("args", verify_args, "n [a b] FILE")->required()->expected(2, 4);
    verify->add_option("--set", verify_set, "Arbitrary connection set, e.g. 1,4,5");

    int construct_n = 0;
    auto* cons = app.add_subcommand("construct", "Print the explicit coloring of C_n(1,3)");
    cons->add_option("n", construct_n)->required();

    std::vector<int> reduce_args;
    auto* red = app.add_subcommand("reduce", "Reduce C_n(a,b) to C_n(1,c)");
    red->add_option("graph", reduce_args, "n a b")->required()->expected(3);

    int table_from = 0, table_to = 0;
    auto* table = app.add_subcommand("table", "Closed-form values for a range of n");
    table->add_option("from", table_from)->required();
    table->add_option("to", table_to)->required();

    int observe_n = 0, samples = 500;
    std::uint64_t seed = kDefaultSeed;
    auto* observe = app.add_subcommand("observe", "Structural checks on C_n(1,3) (randomized parts seeded)");
    observe->add_option("n", observe_n)->required();
    observe->add_option("--samples", samples, "Random colorings for the capacity check")->capture_default_str();
    observe->add_option("--seed", seed, "Seed for the random colorings")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.format = as_json ? Format::json : as_csv ? Format::csv : Format::text;
    out.command = app.get_subcommands().front()->get_name();

    try {
        const auto limits = tdc::Limits::from_env();
        const auto budget = make_budget(budget_nodes, budget_seconds);
        if (*chidt) return run_chidt(out, chidt_args, exact, construct, budget, limits);
        if (*sweep) return run_sweep(out, sweep_from, sweep_to, exact_up_to, budget, limits);
        if (*inv) return run_invariants(out, inv_graph, oracle, limits);
        if (*verify) {
            GraphSpec spec;
            spec.set = verify_set;
            for (std::size_t i = 0; i + 1 < verify_args.size(); ++i) {
                try {
                    spec.ints.push_back(std::stoi(verify_args[i]));
                } catch (const std::exception&) {
                    throw tdc::InvalidInput("graph argument '" + verify_args[i] + "' is not an integer");
                }
            }
            return run_verify(out, spec, verify_args.back());
        }
        if (*cons) return run_construct(out, construct_n);
        if (*red) return run_reduce(out, reduce_args[0], reduce_args[1], reduce_args[2]);
        if (*table) return run_table(out, table_from, table_to);
        if (*observe) {
            return run_observe(out, observe_n, samples, seed, limits);
        }
    } catch (const tdc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tdc::InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const tdc::LimitExceeded& e) {
        std::cerr << "limit: " << e.what() << " (raise TDC_SOLVER_LIMIT / TDC_ORACLE_LIMIT)\n";
        return kExitInput;
    }
    return kExitInput;
}
