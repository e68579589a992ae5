#pragma once

#include <cstdint>
#include <random>

#include "isr1/mat2.hpp"

namespace isr1 {

/// Fixed default seed for every sampled verification; override with the
/// ISR1_SEED environment variable or a --seed flag.
inline constexpr std::uint64_t kDefaultSeed = 271828;

/// Deterministic sampler on top of std::mt19937_64. Values are derived by
/// modulo reduction of raw engine output, so identical seeds give identical
/// streams on every platform (std::uniform_int_distribution would not).
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed = kDefaultSeed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi] (inclusive); span must fit uint64.
    long long next_int(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(eng_() % span);
    }

    /// Matrix with entries in [-bound, bound].
    Mat2 next_mat(long long bound) {
        return {Int(next_int(-bound, bound)), Int(next_int(-bound, bound)),
                Int(next_int(-bound, bound)), Int(next_int(-bound, bound))};
    }

    /// Random unimodular matrix: a product of elementary shears and sign
    /// flips, so det is exactly +-1.
    Mat2 next_unimodular(long long shear_bound, int rounds = 3) {
        Mat2 t = Mat2::identity();
        for (int i = 0; i < rounds; ++i) {
            const Int q1(next_int(-shear_bound, shear_bound));
            const Int q2(next_int(-shear_bound, shear_bound));
            t = t * Mat2{1, q1, 0, 1} * Mat2{1, 0, q2, 1};
        }
        if (next_int(0, 1)) t = t * Mat2::diag(1, -1);
        if (next_int(0, 1)) t = t * Mat2{0, 1, 1, 0};
        return t;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace isr1
