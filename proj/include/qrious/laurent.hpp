#pragma once

#include "qrious/int_poly.hpp"
#include "qrious/integer.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrious {

inline constexpr std::size_t kDefaultTermBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
    std::size_t terms;
    std::size_t budget;

    BudgetExceeded(std::size_t t, std::size_t b)
        : std::runtime_error("stored term count " + std::to_string(t) +
                             " exceeds the budget of " + std::to_string(b)),
          terms(t),
          budget(b) {}
};

// q^s x^a y^b with s >= 0.
struct LaurentMonomial {
    i64 qpow;
    i64 xpow;
    i64 ypow;
};

// Sparse Laurent polynomial in x, y over Z[q]: (xpow, ypow) -> coefficient.
// Zero coefficients are never stored.
class LaurentPoly2 {
public:
    using Key = std::pair<i64, i64>;

    LaurentPoly2() = default;

    static LaurentPoly2 one() {
        LaurentPoly2 p;
        p.terms_[{0, 0}] = IntPoly::one();
        return p;
    }

    const std::map<Key, IntPoly>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(i64 xpow, i64 ypow, const IntPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({xpow, ypow}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // In-place multiplication by (1 - q^s x^a y^b): subtracts a shifted,
    // q-scaled copy of the current terms. The budget guards peak stored
    // terms, not correctness.
    void mul_one_minus(const LaurentMonomial& m, std::size_t budget = kDefaultTermBudget) {
        std::vector<std::pair<Key, IntPoly>> shifted;
        shifted.reserve(terms_.size());
        for (const auto& [key, coeff] : terms_)
            shifted.emplace_back(Key{key.first + m.xpow, key.second + m.ypow},
                                 coeff.shifted(m.qpow));
        for (auto& [key, coeff] : shifted) {
            auto it = terms_.find(key);
            if (it == terms_.end()) {
                terms_.emplace(key, -coeff);
            } else {
                it->second -= coeff;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        if (terms_.size() > budget) throw BudgetExceeded(terms_.size(), budget);
    }

    // Replaces every coefficient by its value at q = 1 (a constant poly).
    void specialize_q1() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            Int v = it->second.eval_one();
            if (v == 0) {
                it = terms_.erase(it);
            } else {
                it->second = IntPoly::constant(v);
                ++it;
            }
        }
    }

    IntPoly constant_term() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? IntPoly::zero() : it->second;
    }

    // Debug dump: one "xpow ypow : coefficient" line per term, key-sorted.
    std::string dump() const {
        std::string s;
        for (const auto& [key, coeff] : terms_) {
            s += std::to_string(key.first);
            s += ' ';
            s += std::to_string(key.second);
            s += " : ";
            s += coeff.pretty();
            s += '\n';
        }
        return s;
    }

    bool operator==(const LaurentPoly2&) const = default;

private:
    std::map<Key, IntPoly> terms_;
};

inline LaurentPoly2 lp_mul_factor(const LaurentPoly2& p, const LaurentMonomial& m,
                                  std::size_t budget = kDefaultTermBudget) {
    LaurentPoly2 r = p;
    r.mul_one_minus(m, budget);
    return r;
}

inline IntPoly constant_term(const LaurentPoly2& p) { return p.constant_term(); }

// The Pochhammer factors (1 - a q^{j-1}) for j = 1..count, given the base
// monomial a: same x/y powers, qpow stepping up from base.qpow.
inline std::vector<LaurentMonomial> pochhammer_factors(const LaurentMonomial& base, i64 count) {
    std::vector<LaurentMonomial> out;
    out.reserve(static_cast<std::size_t>(count));
    for (i64 j = 1; j <= count; ++j) out.push_back({base.qpow + j - 1, base.xpow, base.ypow});
    return out;
}

}  // namespace qrious
