// Prints the Gaussian binomial triangle [m+n choose m]_q for m+n <= 6,
// together with the q=1 specialization (the ordinary binomial triangle).

#include "qrious/qrious.hpp"

#include <iostream>

using namespace qrious;

int main() {
    const RatioSpec& binomial = find_family("binomial")->spec;
    for (i64 total = 0; total <= 6; ++total) {
        std::cout << "row " << total << ":\n";
        for (i64 m = 0; m <= total; ++m) {
            ParamPoint v{m, total - m};
            QRatioResult r = q_ratio_poly(binomial, v);
            const IntPoly& p = std::get<IntPoly>(r);
            std::cout << "  [" << total << "," << m << "]_q = " << p.pretty()
                      << "   (q=1: " << dec(p.eval_one()) << ")\n";
        }
    }
    return 0;
}
