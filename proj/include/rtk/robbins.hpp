#ifndef RTK_ROBBINS_HPP
#define RTK_ROBBINS_HPP

#include <vector>

#include "rational.hpp"

namespace rtk {

// Number of n x n alternating sign matrices: prod_{k=0}^{n-1} (3k+1)!/(n+k)!.
inline Rational robbins(long n) {
    Rational a(1);
    for (long k = 0; k < n; ++k) a *= factorial(3 * k + 1) / factorial(n + k);
    return a;
}

inline std::vector<Rational> robbins_sequence(long count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (long n = 0; n < count; ++n) out.push_back(robbins(n));
    return out;
}

} // namespace rtk

#endif
