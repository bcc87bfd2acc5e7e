#pragma once

#include "dhs/numeric.hpp"
#include "dhs/rng.hpp"

#include <cstdint>

namespace dhs::test {

// Reduced rational strictly inside (-1, 1) with denominator in [2, max_den].
inline Rational random_interior_cosine(SeededRng& rng, std::uint64_t max_den) {
    const std::uint64_t den = 2 + rng.below(max_den - 1);
    const std::uint64_t num = 1 + rng.below(den - 1);
    return normalize(BigInt(num) * rng.sign(), BigInt(den));
}

inline Rational q(const char* text) {
    return parse_rational(text);
}

} // namespace dhs::test
