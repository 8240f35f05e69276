#include "detkit/random_matrix.hpp"

namespace detkit {

RationalMatrix random_int_matrix(int order, int lo, int hi, Rng& rng) {
    RationalMatrix m(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= order; ++j)
            m.at(i, j) = BigRational(int_in(rng, lo, hi));
    return m;
}

} // namespace detkit
