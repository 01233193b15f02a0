#include "hexweave/patch.hpp"

#include <cstdlib>
#include <numeric>

namespace hexweave {

TorusBasis hermite_form(HexCoord u, HexCoord v) {
    // Column reduction on [[u.a, v.a], [u.b, v.b]] to upper-triangular HNF.
    long a0 = u.a, b0 = u.b, a1 = v.a, b1 = v.b;
    if (a0 * b1 - a1 * b0 == 0) throw std::invalid_argument("singular basis");
    // Euclid on the bottom row to zero out b0; |b0| strictly decreases.
    while (b0 != 0) {
        const long q = b1 / b0;
        a1 -= q * a0;
        b1 -= q * b0;
        std::swap(a0, a1);
        std::swap(b0, b1);
    }
    if (b1 < 0) {
        a1 = -a1;
        b1 = -b1;
    }
    if (a0 < 0) a0 = -a0;
    long c01 = a1 % a0;
    if (c01 < 0) c01 += a0;
    return TorusBasis{int(a0), int(c01), 0, int(b1)};
}

}  // namespace hexweave
