#pragma once

#include <string>
#include <vector>

#include "tdc/circulant.hpp"
#include "tdc/errors.hpp"
#include "tdc/invariants.hpp"

namespace tdc {

inline int ceil_div8(int n) { return (n + 7) / 8; }

/// Total dominator chromatic number of C_n(1,3), n >= 6.
///
/// Cases are tried in order, so n = 9 takes the 8..10 branch even though
/// 9 = 1 (mod 8).
inline int formula_tdc(int n) {
    if (n < 6) throw InvalidInput("chi_d^t formula needs n >= 6, got " + std::to_string(n));
    const int base = 2 * ceil_div8(n);
    if (n == 6 || (8 <= n && n <= 10)) return base;
    if (n % 8 == 1 || n == 11) return base + 1;
    return base + 2;
}

/// Which congruence made C_n(a,b) standard: c = 3 or c = n-3 (mod n).
enum class Congruence { three, minus_three };

struct GeneralFormula {
    int value = 0;
    ReductionResult reduction;
    Congruence held = Congruence::three;
    /// n = 6 is outside the general statement's listed cases but covered by
    /// the C_n(1,3) one.
    bool n6_via_standard = false;
};

/// chi_d^t(C_n(a,b)) for gcd(a,n) = 1 and a^{-1} b = +-3 (mod n), through C_n(1,3).
inline GeneralFormula formula_tdc_general_checked(int n, int a, int b) {
    if (n < 6) throw InvalidInput("chi_d^t formula needs n >= 6, got " + std::to_string(n));
    GeneralFormula out;
    try {
        out.reduction = reduce_to_standard(n, a, b);
    } catch (const InvalidInput& e) {
        throw InvalidInput(std::string("hypothesis gcd(a,n)=1 failed: ") + e.what());
    }
    const int c = out.reduction.raw_c;
    if (c == 3 % n)
        out.held = Congruence::three;
    else if (c == n - 3)
        out.held = Congruence::minus_three;
    else
        throw InvalidInput("hypothesis a^{-1}b = 3 (mod n) failed: a^{-1}b = " + std::to_string(c) +
                           " (mod " + std::to_string(n) + ")");
    out.value = formula_tdc(n);
    out.n6_via_standard = (n == 6);
    return out;
}

inline int formula_tdc_general(int n, int a, int b) { return formula_tdc_general_checked(n, a, b).value; }

/// chi_d^t - gamma_t as split by cases for C_n(1,3): 0 for n = 8, 10; 1 for
/// n = 9; 3 for n = 3 (mod 8) except 11; 2 otherwise.
inline int corollary_offset(int n) {
    if (n < 6) throw InvalidInput("corollary offset needs n >= 6, got " + std::to_string(n));
    if (n == 8 || n == 10) return 0;
    if (n == 9) return 1;
    if (n % 8 == 3 && n != 11) return 3;
    return 2;
}

/// corollary_offset(n) == formula_tdc(n) - gamma_t formula.
inline bool corollary_consistent(int n) {
    return corollary_offset(n) == formula_tdc(n) - total_domination_number_formula(n);
}

struct FormulaRow {
    int n = 0;
    int chi_dt = 0;
    int gamma_t = 0;
    int alpha = 0;
    int rho = 0;
    int offset = 0;
    bool offset_consistent = false;
};

struct FormulaTable {
    std::vector<FormulaRow> rows;

    static FormulaTable build(int from, int to) {
        if (from < 6 || to < from) throw InvalidInput("table range must satisfy 6 <= from <= to");
        FormulaTable t;
        for (int n = from; n <= to; ++n) {
            FormulaRow r;
            r.n = n;
            r.chi_dt = formula_tdc(n);
            r.gamma_t = total_domination_number_formula(n);
            r.alpha = independence_number_formula(n);
            r.rho = open_packing_number_formula(n);
            r.offset = corollary_offset(n);
            r.offset_consistent = r.offset == r.chi_dt - r.gamma_t;
            t.rows.push_back(r);
        }
        return t;
    }

    std::string to_csv() const {
        std::string out = "n,chi_dt,gamma_t,alpha,rho,corollary_offset,offset_consistent\n";
        for (const auto& r : rows)
            out += std::to_string(r.n) + "," + std::to_string(r.chi_dt) + "," + std::to_string(r.gamma_t) +
                   "," + std::to_string(r.alpha) + "," + std::to_string(r.rho) + "," +
                   std::to_string(r.offset) + "," + (r.offset_consistent ? "true" : "false") + "\n";
        return out;
    }
};

}  // namespace tdc
