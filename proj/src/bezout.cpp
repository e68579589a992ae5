#include "isr1/bezout.hpp"

#include <algorithm>
#include <sstream>

#include "isr1/errors.hpp"

namespace isr1 {

namespace {

void require_positive(const Int& a, const Int& b, const char* op) {
    if (a < 1 || b < 1) {
        std::ostringstream msg;
        msg << op << " needs positive integers, got (" << a << ", " << b << ")";
        throw std::invalid_argument(msg.str());
    }
}

void require_coprime(const Int& a, const Int& b, const char* op) {
    const Int g = gcd_int(a, b);
    if (g != 1) {
        std::ostringstream msg;
        msg << op << ": gcd(" << a << ", " << b << ") = " << g << ", expected 1";
        throw NotCoprimeError(msg.str());
    }
}

}  // namespace

std::pair<Int, Int> BezoutFamily::solution(const Int& k) const {
    if (g == 0) return {x0, z0};
    return {x0 + k * (b / g), z0 - k * (a / g)};
}

bool BezoutFamily::contains(const Int& x, const Int& z) const {
    return a * x + b * z == g;
}

BezoutFamily ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) {
        return {};
    }
    Int u0 = abs_int(a), u1 = 1, u2 = 0;
    Int v0 = abs_int(b), v1 = 0, v2 = 1;
    while (v0 > 0) {
        const Int q = u0 / v0;
        Int w0 = u0 - q * v0, w1 = u1 - q * v1, w2 = u2 - q * v2;
        u0 = std::move(v0);
        u1 = std::move(v1);
        u2 = std::move(v2);
        v0 = std::move(w0);
        v1 = std::move(w1);
        v2 = std::move(w2);
    }
    BezoutFamily f;
    f.a = a;
    f.b = b;
    f.g = u0;
    f.x0 = a < 0 ? Int(-u1) : u1;
    f.z0 = b < 0 ? Int(-u2) : u2;
    return f;
}

std::vector<MinimalPair> minimal_pairs(const Int& a, const Int& b) {
    require_positive(a, b, "minimal_pairs");
    require_coprime(a, b, "minimal_pairs");

    std::vector<MinimalPair> out;
    if (a >= 2 && b >= 2) {
        // The representative with 0 < x < b, then its left neighbour.
        const BezoutFamily f = ext_gcd(a, b);
        Int xp = f.x0 % b;
        if (xp < 0) xp += b;
        const Int zp = (1 - a * xp) / b;
        out.push_back({xp - b, zp + a});
        out.push_back({xp, zp});
    } else {
        // Degenerate rule: all solutions with |x| <= b, |z| <= a. The family
        // step in x is b, so at most three consecutive k need checking.
        const BezoutFamily f = ext_gcd(a, b);
        const Int kc = (-f.x0) / b;
        for (Int k = kc - 2; k <= kc + 2; ++k) {
            const auto [x, z] = f.solution(k);
            if (abs_int(x) <= b && abs_int(z) <= a) out.push_back({x, z});
        }
    }
    std::sort(out.begin(), out.end(), [](const MinimalPair& p, const MinimalPair& q) {
        return p.x != q.x ? p.x < q.x : p.z < q.z;
    });
    return out;
}

ShiftedProductSolutions solve_shifted_product(const Int& a, const Int& z0,
                                              const Int& b, const Int& target) {
    if (a < 1) {
        throw std::invalid_argument("solve_shifted_product needs a >= 1");
    }
    ShiftedProductSolutions out;
    if (target == 0) {
        // (a*k - z0)(a*l + b) = 0: one factor vanishes.
        if (z0 % a == 0) out.fixed_k = z0 / a;
        if (b % a == 0) out.fixed_l = -(b / a);
        return out;
    }
    const Int t = abs_int(target);
    for (Int d = 1; d * d <= t; ++d) {
        if (t % d != 0) continue;
        const Int e = t / d;
        for (const Int& d1 : {Int(d), Int(-d), e, Int(-e)}) {
            const Int d2 = target / d1;
            if ((d1 + z0) % a == 0 && (d2 - b) % a == 0) {
                out.solutions.emplace_back((d1 + z0) / a, (d2 - b) / a);
            }
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                        out.solutions.end());
    return out;
}

bool divisibility_isr1(const Int& a, const Int& b) {
    require_positive(a, b, "divisibility_isr1");
    require_coprime(a, b, "divisibility_isr1");
    if (a == 1) return true;  // z = 0 solution has x = 1
    if (a == 2) return true;  // z can be chosen +-1, which divides everything
    const BezoutFamily f = ext_gcd(a, b);
    // z | x-1 somewhere in the family  <=>  (a*k - z0)(a*l + b) = a - 1,
    // z | x+1 somewhere in the family  <=>  (a*k - z0)(a*l + b) = -(a + 1).
    return solve_shifted_product(a, f.z0, b, a - 1).any() ||
           solve_shifted_product(a, f.z0, b, -(a + 1)).any();
}

}  // namespace isr1
