#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace isr1 {

/// Exact arbitrary-precision integer used for all Z-side arithmetic.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/// gcd(|a|,|b|), nonnegative; gcd(0,0) = 0.
inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

inline int sign_int(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// True iff d divides v, with the convention 0 | v only for v = 0.
inline bool divides(const Int& d, const Int& v) {
    if (d == 0) return v == 0;
    return v % d == 0;
}

}  // namespace isr1
