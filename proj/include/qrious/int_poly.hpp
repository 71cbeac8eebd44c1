#pragma once

#include "qrious/integer.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrious {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact polynomial division left a nonzero remainder") {}
};

namespace detail {

using CoeffSpan = std::span<const Int>;

inline constexpr std::size_t kSchoolbookCutoff = 24;

inline void trim_zeros(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::vector<Int> mul_schoolbook(CoeffSpan a, CoeffSpan b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return r;
}

inline std::vector<Int> span_sum(CoeffSpan a, CoeffSpan b) {
    std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

// Entries of src beyond dst stay unchecked only if zero.
inline void add_at(std::vector<Int>& dst, const std::vector<Int>& src, std::size_t off) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (off + i < dst.size())
            dst[off + i] += src[i];
        else
            assert(src[i] == 0);
    }
}

std::vector<Int> mul_dispatch(CoeffSpan a, CoeffSpan b);

// Karatsuba with block decomposition for strongly unbalanced operands.
// Requires a.size() >= b.size() >= 1. Result length is a.size()+b.size()-1.
inline std::vector<Int> mul_recursive(CoeffSpan a, CoeffSpan b) {
    if (b.size() <= kSchoolbookCutoff) return mul_schoolbook(a, b);
    if (a.size() > 2 * b.size()) {
        std::vector<Int> r(a.size() + b.size() - 1, Int(0));
        for (std::size_t off = 0; off < a.size(); off += b.size()) {
            auto chunk = a.subspan(off, std::min(b.size(), a.size() - off));
            add_at(r, mul_dispatch(chunk, b), off);
        }
        return r;
    }
    const std::size_t h = a.size() / 2;
    CoeffSpan a0 = a.first(h), a1 = a.subspan(h);
    CoeffSpan b0 = b.first(std::min(h, b.size()));
    CoeffSpan b1 = b.size() > h ? b.subspan(h) : CoeffSpan{};
    std::vector<Int> z0 = mul_dispatch(a0, b0);
    std::vector<Int> z2 = mul_dispatch(a1, b1);
    std::vector<Int> s1 = span_sum(a0, a1);
    std::vector<Int> s2 = span_sum(b0, b1);
    std::vector<Int> z1 = mul_dispatch(s1, s2);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    add_at(r, z0, 0);
    add_at(r, z1, h);
    add_at(r, z2, 2 * h);
    return r;
}

inline std::vector<Int> mul_dispatch(CoeffSpan a, CoeffSpan b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < b.size()) std::swap(a, b);
    return mul_recursive(a, b);
}

}  // namespace detail

// Dense univariate polynomial over Z, coefficients in ascending degree order.
// Normal form: no trailing zero coefficient; the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { detail::trim_zeros(c_); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        detail::trim_zeros(c_);
    }

    static IntPoly zero() { return IntPoly{}; }

    static IntPoly one() { return constant(1); }

    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPoly monomial(std::size_t k, Int coeff = Int(1)) {
        IntPoly p;
        if (coeff != 0) {
            p.c_.assign(k + 1, Int(0));
            p.c_[k] = std::move(coeff);
        }
        return p;
    }

    // 1 + q + ... + q^{n-1}; the q-integer [n].
    static IntPoly all_ones(std::size_t n) {
        IntPoly p;
        p.c_.assign(n, Int(1));
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return c_; }

    const Int& coeff(std::size_t i) const {
        static const Int kZero(0);
        return i < c_.size() ? c_[i] : kZero;
    }

    const Int& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool is_palindromic() const { return std::equal(c_.begin(), c_.end(), c_.rbegin()); }

    IntPoly& operator+=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        detail::trim_zeros(c_);
        return *this;
    }

    IntPoly& operator-=(const IntPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        detail::trim_zeros(c_);
        return *this;
    }

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        IntPoly r;
        r.c_ = detail::mul_dispatch(a.c_, b.c_);
        detail::trim_zeros(r.c_);
        return r;
    }

    friend IntPoly operator*(const IntPoly& a, const Int& s) {
        if (s == 0) return {};
        IntPoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    bool operator==(const IntPoly& o) const = default;

    // Multiply by q^k.
    IntPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        r.c_.assign(k, Int(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    IntPoly pow(unsigned long e) const {
        IntPoly r = one();
        IntPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    Int eval(const Int& x) const {
        Int r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r *= x;
            r += *it;
        }
        return r;
    }

    // Coefficient sum; the q=1 specialization.
    Int eval_one() const {
        Int r(0);
        for (const auto& c : c_) r += c;
        return r;
    }

    std::string coeff_list() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += c_[i].get_str();
        }
        return s;
    }

    std::string pretty(std::string_view var = "q") const;

private:
    std::vector<Int> c_;
};

namespace detail {

inline std::string superscript(unsigned long e) {
    static constexpr const char* kDigits[10] = {"⁰", "¹", "²", "³", "⁴",
                                                "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string d = std::to_string(e);
    std::string out;
    for (char ch : d) out += kDigits[ch - '0'];
    return out;
}

}  // namespace detail

inline std::string IntPoly::pretty(std::string_view var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? '-' : '+';
        }
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += var;
            if (i >= 2) out += detail::superscript(i);
        }
    }
    return out;
}

// Exact quotient a / b; throws NotDivisible if b does not divide a over Z.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw NotDivisible{};
    const long deg_a = a.degree(), deg_b = b.degree();
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(deg_a - deg_b) + 1, Int(0));
    const Int& lead = b.leading();
    for (long k = deg_a - deg_b; k >= 0; --k) {
        Int& rc = rem[static_cast<std::size_t>(k + deg_b)];
        if (rc == 0) continue;
        if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) throw NotDivisible{};
        Int c;
        mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lead.get_mpz_t());
        for (long j = 0; j <= deg_b; ++j)
            mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(),
                       b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
        quot[static_cast<std::size_t>(k)] = std::move(c);
    }
    for (const auto& r : rem)
        if (r != 0) throw NotDivisible{};
    return IntPoly(std::move(quot));
}

}  // namespace qrious
