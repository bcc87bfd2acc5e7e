#pragma once

#include <cstdint>
#include <random>

namespace dhs {

// mt19937_64 with fixed output mappings, so that a seed pins the entire
// stream independently of the platform's distribution implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // 53 high bits -> [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n < 2)
            return 0;
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        std::uint64_t x;
        do {
            x = next();
        } while (x < threshold);
        return x % n;
    }

    int sign() { return (next() & 1) ? +1 : -1; }

private:
    std::mt19937_64 gen_;
};

} // namespace dhs
