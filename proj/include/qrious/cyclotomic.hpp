#pragma once

#include "qrious/int_poly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qrious {

// Memoized table of cyclotomic polynomials. Entries are write-once; lookups
// lock briefly, so scans should warm the table up-front before fanning out.
class CyclotomicTable {
public:
    static CyclotomicTable& instance() {
        static CyclotomicTable t;
        return t;
    }

    void warm(unsigned d_max) {
        std::lock_guard lock(mu_);
        for (unsigned d = 1; d <= d_max; ++d) ensure(d);
    }

    const IntPoly& get(unsigned d) {
        if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
        std::lock_guard lock(mu_);
        return ensure(d);
    }

private:
    CyclotomicTable() = default;

    // mu_ must be held. std::map nodes are stable, so returned references
    // survive later insertions.
    const IntPoly& ensure(unsigned d) {
        if (auto it = table_.find(d); it != table_.end()) return it->second;
        IntPoly phi;
        if (d == 1) {
            phi = IntPoly{-1, 1};
        } else {
            IntPoly numerator = IntPoly::monomial(d) - IntPoly::one();
            IntPoly denominator = IntPoly::one();
            for (unsigned e = 1; e <= d / 2; ++e)
                if (d % e == 0) denominator = denominator * ensure(e);
            phi = exact_div(numerator, denominator);
        }
        return table_.emplace(d, std::move(phi)).first->second;
    }

    std::mutex mu_;
    std::map<unsigned, IntPoly> table_;
};

inline const IntPoly& cyclotomic(unsigned d) { return CyclotomicTable::instance().get(d); }

inline void warm_cyclotomics(unsigned d_max) { CyclotomicTable::instance().warm(d_max); }

}  // namespace qrious
