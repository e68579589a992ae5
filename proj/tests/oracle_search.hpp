#pragma once

// Independent brute-force oracles used by the unit and acceptance suites.
// Everything here is deliberately written against plain int64 arithmetic
// and straight enumeration, independent of the library's decision paths.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace isr1::testing {

using i64 = std::int64_t;

/// Bounded witness search for [[a,b],[0,0]] per the Diophantine form:
/// find an idempotent [[x,y],[z,1-x]] with |x|,|z| <= cap and
/// a*x + b*z in {+1,-1}; y must exist with x(1-x) = y*z.
/// Returns the (x, z, sign) found, if any.
struct RowWitness {
    i64 x, z;
    int sign;
};

inline std::optional<RowWitness> brute_force_isr1_row(i64 a, i64 b, i64 cap) {
    for (i64 x = -cap; x <= cap; ++x) {
        for (int sign : {+1, -1}) {
            const i64 rhs = sign - a * x;
            if (b == 0) {
                if (rhs != 0) continue;
                // z free; pick z = 1 (nontrivial) if it admits y, else z = 0.
                for (i64 z : {i64{1}, i64{-1}, i64{0}}) {
                    const i64 prod = x * (1 - x);
                    if (z == 0 ? prod == 0 : prod % z == 0) return RowWitness{x, z, sign};
                }
                continue;
            }
            if (rhs % b != 0) continue;
            const i64 z = rhs / b;
            if (z < -cap || z > cap) continue;
            const i64 prod = x * (1 - x);
            if (z == 0 ? prod == 0 : prod % z == 0) return RowWitness{x, z, sign};
        }
    }
    return std::nullopt;
}

/// All solutions (k, l) of (a*k - z0)(a*l + b) = target found by scanning k
/// over the window where a*k - z0 can divide the target. Mathematically the
/// same solution set as the literal (k, l) box scan for |k| within range.
inline std::vector<std::pair<i64, i64>> shifted_product_scan(i64 a, i64 z0, i64 b,
                                                             i64 target, i64 kbound) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 k = -kbound; k <= kbound; ++k) {
        const i64 d1 = a * k - z0;
        if (target == 0) {
            continue;  // handled by the caller via the linear cases
        }
        if (d1 == 0 || target % d1 != 0) continue;
        const i64 d2 = target / d1;
        if ((d2 - b) % a != 0) continue;
        out.emplace_back(k, (d2 - b) / a);
    }
    return out;
}

/// The literal double-loop box scan over k, l in [-box, box].
inline std::vector<std::pair<i64, i64>> shifted_product_box_scan(i64 a, i64 z0, i64 b,
                                                                 i64 target, i64 box) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 k = -box; k <= box; ++k) {
        const i64 d1 = a * k - z0;
        for (i64 l = -box; l <= box; ++l) {
            if (d1 * (a * l + b) == target) out.emplace_back(k, l);
        }
    }
    return out;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        const i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace isr1::testing
