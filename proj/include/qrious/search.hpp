#pragma once

#include "qrious/integrality.hpp"
#include "qrious/ratio_spec.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace qrious {

// One enumerated height-one candidate (a_1 n)!...(a_l n)! / (b_1 n)!...(b_{l+1} n)!
// with entries sorted descending and gcd of all entries 1.
struct SearchCandidate {
    enum class Outcome { Integral, NonIntegral, Skipped };

    std::vector<i64> num;
    std::vector<i64> den;
    Outcome outcome = Outcome::Skipped;
    std::optional<FloorWitness> criterion_witness;  // NonIntegral: failing t/L
    std::optional<i64> witness_n;                   // NonIntegral: smallest bad n found
    std::string skip_reason;
    bool internal_error = false;  // criterion and brute-force oracle disagreed

    i64 sum() const { return std::accumulate(num.begin(), num.end(), i64{0}); }

    RatioSpec to_spec() const {
        RatioSpec s;
        s.params = {'n'};
        for (i64 a : num) s.num.push_back({{a}});
        for (i64 b : den) s.den.push_back({{b}});
        return s;
    }

    std::string label() const {
        std::string t = "(";
        for (std::size_t i = 0; i < num.size(); ++i) {
            if (i) t += ',';
            t += std::to_string(num[i]);
        }
        t += "; ";
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (i) t += ',';
            t += std::to_string(den[i]);
        }
        t += ')';
        return t;
    }
};

namespace detail {

// Partitions of total into exactly `parts` positive integers, descending.
inline void partitions_exact(i64 total, i64 parts, i64 cap, std::vector<i64>& cur,
                             std::vector<std::vector<i64>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    // Each remaining part is at least 1 and at most min(cap, total - (parts-1)).
    i64 hi = std::min(cap, total - (parts - 1));
    for (i64 first = hi; first >= 1; --first) {
        if (first * parts < total) break;
        cur.push_back(first);
        partitions_exact(total - first, parts - 1, first, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<i64>> partitions(i64 total, i64 parts) {
    std::vector<std::vector<i64>> out;
    std::vector<i64> cur;
    if (parts >= 1 && total >= parts) partitions_exact(total, parts, total, cur, out);
    return out;
}

inline i64 gcd_all(const std::vector<i64>& a, const std::vector<i64>& b) {
    i64 g = 0;
    for (i64 x : a) g = std::gcd(g, x);
    for (i64 x : b) g = std::gcd(g, x);
    return g;
}

}  // namespace detail

// Enumerates primitive height-one candidates with 1 <= l <= max_terms
// numerator entries and sum <= max_sum, classifies each with the exact
// one-parameter criterion, and cross-validates every Integral verdict by
// direct evaluation at n = 1..5. NonIntegral verdicts get a concrete witness
// n by brute force (capped; the criterion witness is kept either way).
inline std::vector<SearchCandidate> search_height_one(i64 max_sum, i64 max_terms,
                                                      i64 witness_cap = 200) {
    if (max_sum < 2) throw std::invalid_argument("max_sum must be at least 2");
    if (max_terms < 1) throw std::invalid_argument("max_terms must be at least 1");

    std::vector<SearchCandidate> out;
    for (i64 l = 1; l <= max_terms; ++l) {
        for (i64 s = l + 1; s <= max_sum; ++s) {
            auto nums = detail::partitions(s, l);
            auto dens = detail::partitions(s, l + 1);
            for (const auto& a : nums) {
                for (const auto& b : dens) {
                    if (detail::gcd_all(a, b) != 1) continue;
                    SearchCandidate c;
                    c.num = a;
                    c.den = b;
                    out.push_back(std::move(c));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SearchCandidate& x, const SearchCandidate& y) {
        if (x.sum() != y.sum()) return x.sum() < y.sum();
        if (x.num != y.num) return x.num < y.num;
        return x.den < y.den;
    });

    for (SearchCandidate& c : out) {
        RatioSpec spec = c.to_spec();
        Verdict v = check_integrality_1d(spec);
        if (v.status == IntegralityStatus::Integral) {
            c.outcome = SearchCandidate::Outcome::Integral;
            for (i64 n = 1; n <= 5; ++n) {
                RatioValue val = eval_ratio(spec, ParamPoint{n});
                if (std::holds_alternative<NonInteger>(val)) {
                    c.internal_error = true;
                    break;
                }
            }
        } else {
            c.outcome = SearchCandidate::Outcome::NonIntegral;
            c.criterion_witness = v.floor_witness;
            for (i64 n = 1; n <= witness_cap; ++n) {
                RatioValue val = eval_ratio(spec, ParamPoint{n});
                if (std::holds_alternative<NonInteger>(val)) {
                    c.witness_n = n;
                    break;
                }
            }
            // A missing witness under the cap is left empty, not flagged: the
            // criterion is exact for one parameter, the cap is not.
        }
    }
    return out;
}

}  // namespace qrious
