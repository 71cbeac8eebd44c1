#pragma once

#include "qrious/integer.hpp"
#include "qrious/ratio_spec.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qrious {

// Raw factorial products before reduction; kept separate so a failed
// divisibility check can report the exact fraction it saw.
struct NonInteger {
    Int numerator;
    Int denominator;
};

using RatioValue = std::variant<Int, NonInteger>;

// Exact value of the ratio at p. The point must be in the spec's domain.
inline RatioValue eval_ratio(const RatioSpec& spec, const ParamPoint& p) {
    if (!spec.in_domain(p)) throw DomainError("point outside spec domain");
    Int num = 1, den = 1;
    for (const auto& f : spec.num) num *= factorial(static_cast<unsigned long>(f.eval(p.values)));
    for (const auto& f : spec.den) den *= factorial(static_cast<unsigned long>(f.eval(p.values)));
    if (num % den == 0) return Int(num / den);
    return NonInteger{num, den};
}

namespace detail {

// Floor-sum discrepancy at residue point r mod d, no domain guard. Balance
// makes this periodic in each coordinate with period d, so scanning residues
// covers every rational direction with denominator d.
inline i64 residue_delta(const RatioSpec& spec, std::span<const i64> r, i64 d) {
    i64 s = 0;
    for (const auto& f : spec.num) s += floor_div(f.eval(r), d);
    for (const auto& f : spec.den) s -= floor_div(f.eval(r), d);
    return s;
}

}  // namespace detail

// delta(spec, v, d) = sum of floor(<a_i, v>/d) over numerator forms minus the
// same over denominator forms. Requires d >= 2 and v componentwise >= 0.
inline i64 delta(const RatioSpec& spec, const ParamPoint& v, i64 d) {
    if (d < 2) throw std::invalid_argument("delta requires d >= 2");
    if (v.values.size() != spec.arity())
        throw std::invalid_argument("point arity does not match spec");
    for (i64 x : v.values)
        if (x < 0) throw DomainError("delta requires a nonnegative point");
    return detail::residue_delta(spec, v.values, d);
}

enum class IntegralityStatus { Integral, NonIntegral, Inconclusive };

inline const char* to_string(IntegralityStatus s) {
    switch (s) {
        case IntegralityStatus::Integral: return "Integral";
        case IntegralityStatus::NonIntegral: return "NonIntegral";
        case IntegralityStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// A residue class where the floor-sum went negative.
struct FloorWitness {
    std::vector<i64> residue;
    i64 modulus;
    i64 value;
};

// A lattice point where the ratio itself is non-integral.
struct PointWitness {
    ParamPoint point;
    Int numerator;
    Int denominator;
};

struct Verdict {
    IntegralityStatus status;
    i64 scan_depth;       // largest modulus actually checked
    i64 certified_depth;  // modulus bound sufficient for a certificate
    std::optional<FloorWitness> floor_witness;
    std::optional<PointWitness> point_witness;
};

// Depth at which the residue scan becomes a certificate. For one parameter
// every breakpoint of the floor sum on [0,1) has denominator dividing the lcm
// of the coefficient magnitudes, so the bound is exact; for several
// parameters the same bound is used as a heuristic cutoff.
inline i64 certified_scan_depth(const RatioSpec& spec) { return spec.coefficient_lcm(); }

// One-parameter criterion: the ratio is integral for all n >= 0 iff the
// floor sum is nonnegative at every t/L with L = lcm of coefficient
// magnitudes. Exhaustive, hence always conclusive.
inline Verdict check_integrality_1d(const RatioSpec& spec) {
    if (spec.arity() != 1) throw UnsupportedSpec("check_integrality_1d needs a 1-parameter spec");
    if (!spec.balanced()) throw UnbalancedSpec("criterion requires a balanced spec");
    for (const auto& f : spec.num)
        if (f.coeffs[0] < 0) throw UnsupportedSpec("criterion requires nonnegative coefficients");
    for (const auto& f : spec.den)
        if (f.coeffs[0] < 0) throw UnsupportedSpec("criterion requires nonnegative coefficients");

    const i64 L = spec.coefficient_lcm();
    Verdict v{IntegralityStatus::Integral, L, L, std::nullopt, std::nullopt};
    auto floor_ct = [L](i64 c, i64 t) {
        // c, t >= 0, so truncation is floor; widen to dodge c*t overflow.
        return static_cast<i64>(static_cast<__int128>(c) * t / L);
    };
    for (i64 t = 0; t < L; ++t) {
        i64 s = 0;
        for (const auto& f : spec.num) s += floor_ct(f.coeffs[0], t);
        for (const auto& f : spec.den) s -= floor_ct(f.coeffs[0], t);
        if (s < 0) {
            v.status = IntegralityStatus::NonIntegral;
            v.floor_witness = FloorWitness{{t}, L, s};
            break;
        }
    }
    return v;
}

// Multi-parameter scan: checks residue points in {0..d-1}^k for each modulus
// d = 2..d_max, then cross-validates with exact evaluation on a small box.
// Integral is only claimed when d_max reaches the certified depth; otherwise
// a clean scan reports Inconclusive.
inline Verdict check_integrality_scan(const RatioSpec& spec, i64 d_max, i64 eval_box = 6) {
    if (!spec.balanced()) throw UnbalancedSpec("criterion requires a balanced spec");
    if (d_max < 2) throw std::invalid_argument("d_max must be at least 2");

    const i64 certified = certified_scan_depth(spec);
    Verdict v{IntegralityStatus::Inconclusive, d_max, certified, std::nullopt, std::nullopt};

    for (i64 d = 2; d <= d_max && !v.floor_witness; ++d) {
        for_each_lattice_point(spec.arity(), d - 1, [&](std::span<const i64> r) {
            if (v.floor_witness) return;
            i64 s = detail::residue_delta(spec, r, d);
            if (s < 0)
                v.floor_witness = FloorWitness{std::vector<i64>(r.begin(), r.end()), d, s};
        });
    }
    if (v.floor_witness) {
        v.status = IntegralityStatus::NonIntegral;
        v.scan_depth = v.floor_witness->modulus;
        return v;
    }

    // Exact cross-check: any non-integral value contradicts a clean scan and
    // wins; it also catches domains the residue scan cannot see.
    for_each_lattice_point(spec.arity(), eval_box, [&](std::span<const i64> pt) {
        if (v.point_witness) return;
        ParamPoint p{std::vector<i64>(pt.begin(), pt.end())};
        if (!spec.in_domain(p)) return;
        RatioValue val = eval_ratio(spec, p);
        if (auto* ni = std::get_if<NonInteger>(&val))
            v.point_witness = PointWitness{p, ni->numerator, ni->denominator};
    });
    if (v.point_witness) {
        v.status = IntegralityStatus::NonIntegral;
        return v;
    }

    if (d_max >= certified) v.status = IntegralityStatus::Integral;
    return v;
}

}  // namespace qrious
