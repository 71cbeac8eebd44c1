#pragma once

#include "qrious/parse.hpp"
#include "qrious/q_ratio.hpp"
#include "qrious/ratio_spec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qrious {

// A named ratio from the registry. The domain predicate is the spec's own
// in_domain (negative-coefficient forms cut out triangular domains, e.g. the
// n-m factor forcing m <= n).
struct Family {
    std::string name;
    std::string display;
    std::string domain_note;
    RatioSpec spec;

    long height() const { return spec.height(); }
    bool balanced() const { return spec.balanced(); }
};

// Registry of the built-in families. A and Aq (likewise C and Cq at m=0)
// share a formula; the q-reading is the caller's choice of evaluation, so
// the specs are the same and only the display differs.
inline const std::vector<Family>& known_families() {
    static const std::vector<Family> table = [] {
        std::vector<Family> v;
        auto add = [&](std::string name, std::string display, std::string domain,
                       std::string_view text) {
            v.push_back({std::move(name), std::move(display), std::move(domain),
                         parse_spec(text)});
        };
        add("A", "A(m,n)", "m,n >= 0", "3m+3n,3n,2m,2n/2m+3n,m+2n,m+n,m,n,n");
        add("Aq", "A_q(m,n)", "m,n >= 0", "3m+3n,3n,2m,2n/2m+3n,m+2n,m+n,m,n,n");
        add("C", "C(n)", "n >= 0", "30n,n/15n,10n,6n");
        add("Cq", "C_q(m,n)", "m,n >= 0", "6m+30n,n/3m+15n,2m+10n,m,6n");
        add("binomial", "binomial(m+n,m)", "m,n >= 0", "m+n/m,n");
        add("superCatalan", "S(m,n)", "m,n >= 0", "2m,2n/m,n,m+n");
        add("family3", "T(m,n)", "0 <= m <= n", "m,2n/2m,n,n-m");
        return v;
    }();
    return table;
}

inline const Family* find_family(std::string_view name) {
    for (const auto& f : known_families())
        if (f.name == name) return &f;
    return nullptr;
}

// The two-parameter Cq family pins the one-parameter Chebyshev ratio to its
// m = 0 slice: Cq(0,n) and C(n) must assemble to the same polynomial. True
// iff they agree coefficientwise for every n <= n_max.
inline bool cq_reduces_to_chebyshev(i64 n_max) {
    const RatioSpec& cq = find_family("Cq")->spec;
    const RatioSpec& c = find_family("C")->spec;
    for (i64 n = 0; n <= n_max; ++n) {
        QRatioResult lhs = q_ratio_poly(cq, ParamPoint{0, n});
        QRatioResult rhs = q_ratio_poly(c, ParamPoint{n});
        auto* lp = std::get_if<IntPoly>(&lhs);
        auto* rp = std::get_if<IntPoly>(&rhs);
        if (!lp || !rp || !(*lp == *rp)) return false;
    }
    return true;
}

}  // namespace qrious
