#pragma once

#include "dhs/angle.hpp"

#include <optional>

namespace dhs {

// Rationality class of cos(2*pi*t) for rational t. The cosine is rational
// exactly when the reduced denominator of t is 1, 2, 3, 4 or 6, and then it
// is one of 0, +-1/2, +-1. Keying on the denominator makes the classifier
// exact and table-driven; the acceptance suite validates the rule against
// high-precision numerics for every reduced fraction with denominator <= 120.
struct NivenClass {
    std::optional<Rational> rational_cos; // engaged iff the cosine is rational

    bool is_rational() const noexcept { return rational_cos.has_value(); }
};

NivenClass classify_cos(const AngleTurns& angle);

struct CosValue {
    std::optional<Rational> exact; // engaged iff the cosine is rational
    BigFloat approx;               // ~100 significant digits either way
};

CosValue cos_exact(const AngleTurns& angle);

} // namespace dhs
