#include "dhs/niven.hpp"

#include "dhs/errors.hpp"

namespace dhs {

NivenClass classify_cos(const AngleTurns& angle) {
    const BigInt den = angle.denominator();
    const BigInt num = angle.numerator();
    if (den == 1)
        return {Rational(1)}; // turns == 0 after normalisation
    if (den == 2)
        return {Rational(-1)}; // turns == 1/2
    if (den == 3)
        return {Rational(-1, 2)}; // turns in {1/3, 2/3}
    if (den == 4)
        return {Rational(0)}; // turns in {1/4, 3/4}
    if (den == 6)
        return {Rational(1, 2)}; // turns in {1/6, 5/6}
    (void)num;
    return {std::nullopt};
}

CosValue cos_exact(const AngleTurns& angle) {
    return {classify_cos(angle).rational_cos, cos_turns(angle.turns())};
}

} // namespace dhs
