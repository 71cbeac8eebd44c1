#pragma once

#include "qrious/families.hpp"
#include "qrious/laurent.hpp"
#include "qrious/q_ratio.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>

namespace qrious {

// The twelve Pochhammer bases of the G2 constant-term product, as
// (qpow, xpow, ypow). First group enters with multiplicity m:
//   x, q/x, y, q/y, y/x, qx/y
// second group with multiplicity n:
//   xy, q/xy, y/x^2, qx^2/y, y^2/x, qx/y^2
inline constexpr std::array<LaurentMonomial, 6> kG2BasesM = {{
    {0, 1, 0},
    {1, -1, 0},
    {0, 0, 1},
    {1, 0, -1},
    {0, -1, 1},
    {1, 1, -1},
}};

inline constexpr std::array<LaurentMonomial, 6> kG2BasesN = {{
    {0, 1, 1},
    {1, -1, -1},
    {0, -2, 1},
    {1, 2, -1},
    {0, -1, 2},
    {1, 1, -2},
}};

struct G2Options {
    std::size_t term_budget = kDefaultTermBudget;
    bool q1 = false;  // specialize coefficients at q = 1 after every factor
};

// The 6(m+n)-factor product, m-group factors first, each base in listed
// order. Every stored exponent must stay within the sum of |xpow| (resp.
// |ypow|) over all factors; a violation is a corrupted expansion.
inline LaurentPoly2 g2_product(i64 m, i64 n, const G2Options& opts = {}) {
    if (m < 0 || n < 0) throw std::invalid_argument("g2_product needs non-negative m, n");
    i64 x_bound = 0, y_bound = 0;
    LaurentPoly2 p = LaurentPoly2::one();
    auto apply_group = [&](const std::array<LaurentMonomial, 6>& bases, i64 count) {
        for (const auto& base : bases) {
            for (const auto& f : pochhammer_factors(base, count)) {
                p.mul_one_minus(f, opts.term_budget);
                if (opts.q1) p.specialize_q1();
                x_bound += f.xpow < 0 ? -f.xpow : f.xpow;
                y_bound += f.ypow < 0 ? -f.ypow : f.ypow;
                for (const auto& [key, coeff] : p.terms()) {
                    if (key.first < -x_bound || key.first > x_bound || key.second < -y_bound ||
                        key.second > y_bound)
                        throw std::logic_error("g2 expansion escaped its exponent bound");
                }
            }
        }
    };
    apply_group(kG2BasesM, m);
    apply_group(kG2BasesN, n);
    return p;
}

inline IntPoly g2_constant_term(i64 m, i64 n, const G2Options& opts = {}) {
    return g2_product(m, n, opts).constant_term();
}

// Checks the constant-term identity at (m, n): the CT of the G2 product must
// equal the assembled q-ratio A_q(m, n) coefficientwise.
inline bool verify_g2(i64 m, i64 n, const G2Options& opts = {}) {
    G2Options full_q = opts;
    full_q.q1 = false;
    IntPoly ct = g2_constant_term(m, n, full_q);
    QRatioResult rhs = q_ratio_poly(find_family("Aq")->spec, ParamPoint{m, n});
    auto* poly = std::get_if<IntPoly>(&rhs);
    return poly && *poly == ct;
}

}  // namespace qrious
