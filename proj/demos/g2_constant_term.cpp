// Expands the 12-base G2 Pochhammer product at small (m, n), extracts the
// constant term in x and y, and compares it against the cyclotomic assembly
// of A_q(m, n).

#include "qrious/qrious.hpp"

#include <iostream>

using namespace qrious;

int main() {
    for (i64 m = 0; m <= 2; ++m) {
        for (i64 n = 0; m + n <= 2; ++n) {
            LaurentPoly2 product = g2_product(m, n);
            IntPoly ct = product.constant_term();
            QRatioResult rhs = q_ratio_poly(find_family("Aq")->spec, ParamPoint{m, n});
            const IntPoly& aq = std::get<IntPoly>(rhs);
            std::cout << "(m,n) = (" << m << "," << n << ")  stored terms: "
                      << product.term_count() << "\n";
            std::cout << "  CT  = " << ct.pretty() << "\n";
            std::cout << "  A_q = " << aq.pretty() << "\n";
            std::cout << "  " << (ct == aq ? "match" : "MISMATCH") << "\n";
        }
    }
    return 0;
}
