#pragma once

#include "qrious/cyclotomic.hpp"
#include "qrious/int_poly.hpp"
#include "qrious/integrality.hpp"
#include "qrious/parallel.hpp"
#include "qrious/ratio_spec.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qrious {

// [m]! = product of the q-integers [1][2]...[m]. Independent of the
// cyclotomic machinery, which makes it the oracle for the assembly path.
inline IntPoly q_factorial(unsigned long m) {
    IntPoly r = IntPoly::one();
    for (unsigned long i = 2; i <= m; ++i) r = r * IntPoly::all_ones(i);
    return r;
}

// Exponent map of a q-factorial ratio at a point: exps[d] is the net power
// of the d-th cyclotomic polynomial, nonzero entries only.
struct CyclotomicExponents {
    std::map<i64, i64> exps;

    bool is_polynomial() const {
        for (const auto& [d, e] : exps)
            if (e < 0) return false;
        return true;
    }

    std::optional<std::pair<i64, i64>> first_negative() const {
        for (const auto& [d, e] : exps)
            if (e < 0) return std::make_pair(d, e);
        return std::nullopt;
    }

    bool operator==(const CyclotomicExponents&) const = default;
};

inline CyclotomicExponents q_ratio_exponents(const RatioSpec& spec, const ParamPoint& v) {
    if (!spec.balanced())
        throw UnbalancedSpec("q-ratio needs a balanced spec: the (1-q) powers must cancel");
    if (!spec.in_domain(v)) throw DomainError("point outside spec domain");
    CyclotomicExponents out;
    const i64 top = spec.max_form_value(v);
    for (i64 d = 2; d <= top; ++d) {
        i64 e = detail::residue_delta(spec, v.values, d);
        if (e != 0) out.exps[d] = e;
    }
    return out;
}

struct NotPolynomial {
    i64 cyclotomic_index;
    i64 exponent;
};

using QRatioResult = std::variant<IntPoly, NotPolynomial>;

// Assembles the q-analogue at v as a product of cyclotomic powers, factors
// in increasing d. Returns NotPolynomial with the smallest offending index
// when any exponent is negative.
inline QRatioResult q_ratio_poly(const RatioSpec& spec, const ParamPoint& v) {
    CyclotomicExponents exps = q_ratio_exponents(spec, v);
    if (auto neg = exps.first_negative()) return NotPolynomial{neg->first, neg->second};
    IntPoly r = IntPoly::one();
    for (const auto& [d, e] : exps.exps)
        r = r * cyclotomic(static_cast<unsigned>(d)).pow(static_cast<unsigned long>(e));
    return r;
}

// Expected degree of the assembled polynomial: sum of T over numerator form
// values minus the same over the denominator, T(m) = m(m-1)/2.
inline i64 q_ratio_degree(const RatioSpec& spec, const ParamPoint& v) {
    auto T = [](i64 m) { return m * (m - 1) / 2; };
    i64 s = 0;
    for (const auto& f : spec.num) s += T(f.eval(v.values));
    for (const auto& f : spec.den) s -= T(f.eval(v.values));
    return s;
}

enum class PositivityStatus { AllNonNegative, NegativeCoefficientFound, NotPolynomialAt };

inline const char* to_string(PositivityStatus s) {
    switch (s) {
        case PositivityStatus::AllNonNegative: return "AllNonNegative";
        case PositivityStatus::NegativeCoefficientFound: return "NegativeCoefficientFound";
        case PositivityStatus::NotPolynomialAt: return "NotPolynomialAt";
    }
    return "?";
}

struct PositivityWitness {
    ParamPoint point;
    std::string detail;
};

struct MinCoefficient {
    Int value;
    ParamPoint point;
    i64 power;
};

struct PositivityReport {
    std::string family;
    i64 box = 0;
    PositivityStatus status = PositivityStatus::AllNonNegative;
    std::vector<PositivityWitness> witnesses;
    std::optional<MinCoefficient> min_coefficient;
    i64 points_scanned = 0;
    i64 points_skipped = 0;
};

// Checks every in-domain point of {0..box}^k. All coefficients are inspected;
// the smallest one seen is recorded even when the scan is clean. Out-of-domain
// points (the triangular third family) are skipped and counted. Output is
// deterministic: points in lexicographic order regardless of jobs.
inline PositivityReport positivity_scan(const RatioSpec& spec, i64 box, unsigned jobs = 1,
                                        std::string family_name = "") {
    if (!spec.balanced()) throw UnbalancedSpec("positivity scan needs a balanced spec");
    if (box < 0) throw std::invalid_argument("box must be non-negative");

    std::vector<ParamPoint> points;
    for_each_lattice_point(spec.arity(), box, [&](std::span<const i64> pt) {
        points.emplace_back(std::vector<i64>(pt.begin(), pt.end()));
    });

    // Warm the cyclotomic cache to the largest index any point can request,
    // so workers only ever read it.
    i64 top = 2;
    for (const auto& p : points)
        if (spec.in_domain(p)) top = std::max(top, spec.max_form_value(p));
    warm_cyclotomics(static_cast<unsigned>(top));

    struct PointOutcome {
        bool skipped = false;
        std::optional<NotPolynomial> not_poly;
        std::optional<std::pair<Int, i64>> min_coeff;  // value, power
    };
    std::vector<PointOutcome> outcomes(points.size());

    parallel_for(points.size(), jobs, [&](std::size_t i) {
        const ParamPoint& p = points[i];
        PointOutcome& out = outcomes[i];
        if (!spec.in_domain(p)) {
            out.skipped = true;
            return;
        }
        QRatioResult r = q_ratio_poly(spec, p);
        if (auto* np = std::get_if<NotPolynomial>(&r)) {
            out.not_poly = *np;
            return;
        }
        const IntPoly& poly = std::get<IntPoly>(r);
        Int best = poly.coeff(0);
        i64 best_pow = 0;
        for (std::size_t j = 1; j < poly.coeffs().size(); ++j) {
            if (poly.coeffs()[j] < best) {
                best = poly.coeffs()[j];
                best_pow = static_cast<i64>(j);
            }
        }
        out.min_coeff = std::make_pair(best, best_pow);
    });

    PositivityReport report;
    report.family = std::move(family_name);
    report.box = box;
    bool saw_negative = false, saw_not_poly = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const PointOutcome& out = outcomes[i];
        if (out.skipped) {
            ++report.points_skipped;
            continue;
        }
        ++report.points_scanned;
        if (out.not_poly) {
            saw_not_poly = true;
            report.witnesses.push_back(
                {points[i], "not a polynomial: cyclotomic index " +
                                std::to_string(out.not_poly->cyclotomic_index) + " has exponent " +
                                std::to_string(out.not_poly->exponent)});
            continue;
        }
        const auto& [value, power] = *out.min_coeff;
        if (value < 0) {
            saw_negative = true;
            report.witnesses.push_back({points[i], "negative coefficient " + dec(value) +
                                                       " at q^" + std::to_string(power)});
        }
        if (!report.min_coefficient || value < report.min_coefficient->value)
            report.min_coefficient = MinCoefficient{value, points[i], power};
    }
    if (saw_not_poly)
        report.status = PositivityStatus::NotPolynomialAt;
    else if (saw_negative)
        report.status = PositivityStatus::NegativeCoefficientFound;
    return report;
}

}  // namespace qrious
