#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "isr1/bezout.hpp"
#include "isr1/errors.hpp"
#include "isr1/sampling.hpp"
#include "isr1/zdecider.hpp"
#include "oracle_search.hpp"

using namespace isr1;
using isr1::testing::shifted_product_box_scan;
using isr1::testing::shifted_product_scan;

namespace {

bool family_has(const BezoutFamily& f, long long x, long long z) {
    return f.contains(Int(x), Int(z));
}

std::vector<std::pair<Int, Int>> pairs_of(const std::vector<MinimalPair>& v) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& p : v) out.emplace_back(p.x, p.z);
    return out;
}

}  // namespace

TEST_CASE("ext_gcd base identities over a grid") {
    for (int a = -25; a <= 25; ++a) {
        for (int b = -25; b <= 25; ++b) {
            const BezoutFamily f = ext_gcd(a, b);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(f.a * f.x0 + f.b * f.z0 == f.g);
            CHECK(f.g == gcd_int(a, b));
            CHECK(f.g >= 0);
            CHECK((f.g == 0) == (a == 0 && b == 0));
        }
    }
}

TEST_CASE("ext_gcd named examples") {
    CHECK(ext_gcd(8, 13).g == 1);
    CHECK(family_has(ext_gcd(8, 13), 5, -3));
    const BezoutFamily z = ext_gcd(0, 0);
    CHECK(z.g == 0);
    CHECK(z.x0 == 0);
    CHECK(z.z0 == 0);
    CHECK(ext_gcd(12, 5).g == 1);
    CHECK(family_has(ext_gcd(12, 5), 3, -7));
}

TEST_CASE("solution family covers exactly the solutions") {
    // For coprime pairs, every solution within a box must be hit by exactly
    // one k, and every family member must solve the equation.
    for (int a = 1; a <= 12; ++a) {
        for (int b = 1; b <= 12; ++b) {
            if (gcd_int(a, b) != 1) continue;
            const BezoutFamily f = ext_gcd(a, b);
            for (int k = -5; k <= 5; ++k) {
                const auto [x, z] = f.solution(k);
                CHECK(Int(a) * x + Int(b) * z == 1);
            }
            for (int x = -30; x <= 30; ++x) {
                for (int z = -30; z <= 30; ++z) {
                    if (a * x + b * z != 1) continue;
                    // recover k from the x-coordinate and cross-check z
                    const Int k = (Int(x) - f.x0) / b;
                    const auto [xs, zs] = f.solution(k);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(x);
                    CHECK(xs == x);
                    CHECK(zs == z);
                }
            }
        }
    }
}

TEST_CASE("minimal pairs match the worked examples") {
    using P = std::pair<Int, Int>;
    CHECK(pairs_of(minimal_pairs(8, 13)) == std::vector<P>{{-8, 5}, {5, -3}});
    CHECK(pairs_of(minimal_pairs(5, 12)) == std::vector<P>{{-7, 3}, {5, -2}});
    CHECK(pairs_of(minimal_pairs(15, 23)) == std::vector<P>{{-3, 2}, {20, -13}});
    CHECK(pairs_of(minimal_pairs(51, 71)) == std::vector<P>{{-32, 23}, {39, -28}});
    CHECK(pairs_of(minimal_pairs(5, 7)) == std::vector<P>{{-4, 3}, {3, -2}});
    CHECK(pairs_of(minimal_pairs(5, 9)) == std::vector<P>{{-7, 4}, {2, -1}});
    CHECK(pairs_of(minimal_pairs(12, 17)) == std::vector<P>{{-7, 5}, {10, -7}});
    CHECK(pairs_of(minimal_pairs(12, 19)) == std::vector<P>{{-11, 7}, {8, -5}});
    CHECK(pairs_of(minimal_pairs(12, 31)) == std::vector<P>{{-18, 7}, {13, -5}});
    CHECK(pairs_of(minimal_pairs(13, 18)) == std::vector<P>{{-11, 8}, {7, -5}});
    CHECK(pairs_of(minimal_pairs(12, 5)) == std::vector<P>{{-2, 5}, {3, -7}});
}

TEST_CASE("minimal pairs: exactly two, bounded, opposite signs, in family") {
    for (int a = 2; a <= 40; ++a) {
        for (int b = 2; b <= 40; ++b) {
            if (gcd_int(a, b) != 1) continue;
            const auto pairs = minimal_pairs(a, b);
            CAPTURE(a);
            CAPTURE(b);
            REQUIRE(pairs.size() == 2);
            const BezoutFamily f = ext_gcd(a, b);
            int neg_x = 0, pos_x = 0;
            for (const MinimalPair& p : pairs) {
                CHECK(abs_int(p.x) < b);
                CHECK(abs_int(p.z) < a);
                CHECK(sign_int(p.x) * sign_int(p.z) == -1);
                CHECK(f.contains(p.x, p.z));
                (p.x < 0 ? neg_x : pos_x)++;
            }
            CHECK(neg_x == 1);
            CHECK(pos_x == 1);
        }
    }
}

TEST_CASE("minimal pairs degenerate rule for a = 1 or b = 1") {
    // All solutions with |x| <= b and |z| <= a; always exactly two.
    for (int b = 1; b <= 20; ++b) {
        const auto pairs = minimal_pairs(1, b);
        REQUIRE(pairs.size() == 2);
        for (const MinimalPair& p : pairs) {
            CHECK(abs_int(p.x) <= b);
            CHECK(abs_int(p.z) <= 1);
            CHECK(1 * p.x + b * p.z == 1);
        }
    }
    for (int a = 1; a <= 20; ++a) {
        const auto pairs = minimal_pairs(a, 1);
        REQUIRE(pairs.size() == 2);
        for (const MinimalPair& p : pairs) {
            CHECK(abs_int(p.x) <= 1);
            CHECK(abs_int(p.z) <= a);
            CHECK(a * p.x + 1 * p.z == 1);
        }
    }
    CHECK(pairs_of(minimal_pairs(1, 1)) == std::vector<std::pair<Int, Int>>{{0, 1}, {1, 0}});
}

TEST_CASE("minimal pairs reject non-coprime input") {
    CHECK_THROWS_AS(minimal_pairs(4, 6), NotCoprimeError);
    CHECK_THROWS_AS(minimal_pairs(15, 25), NotCoprimeError);
    CHECK_THROWS_AS(minimal_pairs(0, 3), std::invalid_argument);
}

TEST_CASE("shifted product: worked examples") {
    // (13k+5)(13l+18) = 12 has no solutions.
    CHECK(!solve_shifted_product(13, -5, 18, 12).any());
    // (2k-3)(2l+5) = 1 forces both factors to the same sign of 1.
    const auto s = solve_shifted_product(2, 3, 5, 1);
    REQUIRE(s.solutions.size() == 2);
    CHECK(s.solutions[0] == std::pair<Int, Int>{1, -3});
    CHECK(s.solutions[1] == std::pair<Int, Int>{2, -2});
    CHECK((2 * 1 - 3) * (2 * (-3) + 5) == 1);
    // Zero target with a = 1: both degenerate lines.
    const auto inf = solve_shifted_product(1, 0, 1, 0);
    CHECK(inf.infinite());
    REQUIRE(inf.fixed_k.has_value());
    REQUIRE(inf.fixed_l.has_value());
    CHECK(*inf.fixed_k == 0);
    CHECK(*inf.fixed_l == -1);
    CHECK(inf.solutions.empty());
}

TEST_CASE("shifted product: returned pairs satisfy the exact equation") {
    SampleRng rng(kDefaultSeed);
    for (int i = 0; i < 400; ++i) {
        const long long a = rng.next_int(1, 40);
        const long long z0 = rng.next_int(-40, 40);
        const long long b = rng.next_int(-40, 40);
        const long long t = rng.next_int(-60, 60);
        const auto sols = solve_shifted_product(a, z0, b, t);
        for (const auto& [k, l] : sols.solutions) {
            CHECK((Int(a) * k - z0) * (Int(a) * l + b) == t);
        }
    }
}

TEST_CASE("shifted product agrees with the brute-force scan") {
    // Exhaustive on a small box.
    for (int a = 1; a <= 6; ++a) {
        for (int z0 = -6; z0 <= 6; ++z0) {
            for (int b = -6; b <= 6; ++b) {
                for (int t = -12; t <= 12; ++t) {
                    if (t == 0) continue;
                    const auto got = solve_shifted_product(a, z0, b, t);
                    const auto want = shifted_product_scan(a, z0, b, t, 50);
                    CAPTURE(a);
                    CAPTURE(z0);
                    CAPTURE(b);
                    CAPTURE(t);
                    REQUIRE(got.solutions.size() == want.size());
                    for (size_t i = 0; i < want.size(); ++i) {
                        CHECK(got.solutions[i].first == want[i].first);
                        CHECK(got.solutions[i].second == want[i].second);
                    }
                }
            }
        }
    }
    // Sampled against the literal (k, l) double loop.
    SampleRng rng(kDefaultSeed);
    for (int i = 0; i < 40; ++i) {
        const long long a = rng.next_int(1, 10);
        const long long z0 = rng.next_int(-20, 20);
        const long long b = rng.next_int(-20, 20);
        long long t = rng.next_int(-30, 30);
        if (t == 0) t = 7;
        const auto got = solve_shifted_product(a, z0, b, t);
        const auto want = shifted_product_box_scan(a, z0, b, t, 1000);
        REQUIRE(got.solutions.size() == want.size());
        for (size_t j = 0; j < want.size(); ++j) {
            CHECK(got.solutions[j].first == want[j].first);
            CHECK(got.solutions[j].second == want[j].second);
        }
    }
}

TEST_CASE("divisibility criterion: worked examples") {
    CHECK(divisibility_isr1(8, 13));
    CHECK_FALSE(divisibility_isr1(12, 17));
    CHECK(divisibility_isr1(2, 5));
    CHECK_FALSE(divisibility_isr1(13, 18));
    CHECK(divisibility_isr1(5, 12));
    CHECK_FALSE(divisibility_isr1(12, 5));
    CHECK(divisibility_isr1(15, 23));
    CHECK_FALSE(divisibility_isr1(51, 71));
    CHECK_THROWS_AS(divisibility_isr1(6, 9), NotCoprimeError);
}

TEST_CASE("divisibility criterion equals the Euclidean criterion") {
    for (int a = 1; a <= 120; ++a) {
        for (int b = 1; b <= 120; ++b) {
            if (gcd_int(a, b) != 1) continue;
            CAPTURE(a);
            CAPTURE(b);
            CHECK(divisibility_isr1(a, b) == euclidean_criterion(a, b).accepted);
        }
    }
}
