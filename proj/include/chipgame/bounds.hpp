#pragma once

// Closed-form bounds around the online panchromatic coloring number
// p_OL(k, r), evaluated in exact rational arithmetic.

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace chipgame {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

struct PolBounds {
    Rational lower;  // (r/(r-1))^(k-1)
    Rational upper;  // r^3 (k+1) (r/(r-1))^k
};

/// Lower and upper bounds on p_OL(k, r), the minimum hyperedge count of a
/// k-uniform hypergraph on which Presenter wins the online panchromatic
/// r-coloring game.
inline PolBounds pol_bounds(int k, int r) {
    if (r < 2) throw std::invalid_argument("pol_bounds: need r >= 2");
    if (k < 1) throw std::invalid_argument("pol_bounds: need k >= 1");
    const Rational ratio(r, r - 1);
    PolBounds out;
    out.lower = rational_pow(ratio, k - 1);
    out.upper = Rational(BigInt(r) * r * r * (k + 1)) * rational_pow(ratio, k);
    return out;
}

/// Sum_{j=0..k} (m/(m-1))^j, the growth envelope of the brick size table.
inline Rational brick_growth_sum(int m, int k) {
    if (m < 2) throw std::invalid_argument("brick_growth_sum: need m >= 2");
    const Rational ratio(m, m - 1);
    Rational sum = 0;
    for (int j = 0; j <= k; ++j) sum += rational_pow(ratio, j);
    return sum;
}

/// m (m/(m-1))^k, the strict cap on the brick size f(k).
inline Rational brick_growth_cap(int m, int k) {
    if (m < 2) throw std::invalid_argument("brick_growth_cap: need m >= 2");
    return Rational(m) * rational_pow(Rational(m, m - 1), k);
}

}  // namespace chipgame
