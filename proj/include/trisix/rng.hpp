#pragma once

// Deterministic seeded sampling of exact rational points.  mt19937_64 has
// a fully specified output sequence, so a (seed, config) pair reproduces
// byte-identical reports on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "trisix/rational.hpp"

namespace trisix {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [lo, hi], inclusive.
    long next_long(long lo, long hi);

    // Nonzero rational with |numerator| <= box and 1 <= denominator <= box,
    // excluding values in `exclude` (useful for avoiding 0, +-1).
    Rational next_rational(long box = 100);

    // Rational avoiding 0 and +-1.
    Rational next_point(long box = 100);

private:
    std::mt19937_64 gen_;
};

}  // namespace trisix
