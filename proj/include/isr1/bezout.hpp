#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "isr1/int.hpp"

namespace isr1 {

/// Base solution of a*x + b*z = g together with the data needed to walk the
/// whole solution family. For g = 1 every solution is
/// (x0 + k*b, z0 - k*a) for exactly one integer k.
struct BezoutFamily {
    Int a{0};
    Int b{0};
    Int g{0};  // gcd(|a|,|b|) >= 0; g = 0 only for a = b = 0
    Int x0{0};
    Int z0{0};

    /// k-th member of the solution family of a*x + b*z = g (needs g >= 1).
    std::pair<Int, Int> solution(const Int& k) const;
    /// True iff (x, z) solves a*x + b*z = g.
    bool contains(const Int& x, const Int& z) const;
};

/// Extended Euclid. Deterministic; handles zero and negative inputs.
BezoutFamily ext_gcd(const Int& a, const Int& b);

/// Solution (x, z) of a*x + b*z = 1 with |x| < b and |z| < a
/// (non-strict bounds in the degenerate cases a = 1 or b = 1).
struct MinimalPair {
    Int x{0};
    Int z{0};

    friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
};

/// The minimal Bezout pairs of coprime positive a, b, sorted by (x, z).
/// For a, b >= 2 there are exactly two, one with x < 0 < z and one with
/// x > 0 > z. For a = 1 or b = 1 the strict bounds admit fewer than two
/// solutions; the degenerate rule returns all solutions with |x| <= b and
/// |z| <= a, which again is exactly two pairs.
/// Throws NotCoprimeError if gcd(a,b) != 1.
std::vector<MinimalPair> minimal_pairs(const Int& a, const Int& b);

/// Integer solutions (k, l) of (a*k - z0)*(a*l + b) = target.
///
/// For target != 0 the solution list is finite and sorted by (k, l). For
/// target = 0 the solutions form up to two lines, reported symbolically:
/// fixed_k (any l) when a | z0, and fixed_l (any k) when a | b.
struct ShiftedProductSolutions {
    std::vector<std::pair<Int, Int>> solutions;
    std::optional<Int> fixed_k;  // target = 0: k = z0/a with l arbitrary
    std::optional<Int> fixed_l;  // target = 0: l = -b/a with k arbitrary

    bool infinite() const { return fixed_k.has_value() || fixed_l.has_value(); }
    bool any() const { return infinite() || !solutions.empty(); }
};

/// Enumerates both-sign divisor pairs (d1, d2) of target with
/// d1 ≡ -z0 (mod a) and d2 ≡ b (mod a); then k = (d1+z0)/a, l = (d2-b)/a.
/// Requires a >= 1.
ShiftedProductSolutions solve_shifted_product(const Int& a, const Int& z0,
                                              const Int& b, const Int& target);

/// True iff some solution (x, z) of a*x + b*z = 1 satisfies z | x-1 or
/// z | x+1 (z = +-1 divides everything; z = 0 occurs only for a = 1 and
/// accepts). Decided for the whole infinite family at once by solving the
/// shifted products with targets a-1 and -(a+1); a in {1, 2} is immediate.
/// Requires positive a, b; throws NotCoprimeError if gcd(a,b) != 1.
bool divisibility_isr1(const Int& a, const Int& b);

}  // namespace isr1
