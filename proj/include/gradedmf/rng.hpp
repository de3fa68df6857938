#pragma once

#include <cstdint>

#include "gradedmf/rational.hpp"

namespace gmf {

// SplitMix64. All randomized corpora (base changes, morphism coefficients,
// stability batches) draw from this so a seed pins the byte-exact output on
// every platform; std::random distributions are not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    // Uniform on [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool flip() { return next() & 1; }

    // Small nonzero rational, numerator in [-4,4]\{0}, denominator in [1,3].
    Rational small_nonzero_rational() {
        long num = range(1, 4) * (flip() ? 1 : -1);
        long den = range(1, 3);
        return ratio(num, den);
    }

    // Small rational, possibly zero.
    Rational small_rational() {
        long num = range(-4, 4);
        long den = range(1, 3);
        return ratio(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace gmf
