#include "trisix/rng.hpp"

namespace trisix {

long SeededRng::next_long(long lo, long hi) {
    // Modulo bias is irrelevant at these ranges; determinism matters.
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(gen_() % span);
}

Rational SeededRng::next_rational(long box) {
    while (true) {
        long num = next_long(-box, box);
        if (num == 0) continue;
        long den = next_long(1, box);
        return Rational(num, den);
    }
}

Rational SeededRng::next_point(long box) {
    while (true) {
        Rational r = next_rational(box);
        if (r == Rational(1) || r == Rational(-1) || r.is_zero()) continue;
        return r;
    }
}

}  // namespace trisix
