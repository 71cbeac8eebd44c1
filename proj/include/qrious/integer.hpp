#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

namespace qrious {

// All exact arithmetic in this library runs on GMP integers.
using Int = mpz_class;
using i64 = std::int64_t;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Floor division for possibly negative numerators; d must be positive.
inline i64 floor_div(i64 a, i64 d) {
    i64 q = a / d;
    i64 r = a % d;
    return (r != 0 && r < 0) ? q - 1 : q;
}

inline std::string dec(const Int& v) { return v.get_str(); }

}  // namespace qrious
