#pragma once

#include "dhs/numeric.hpp"

namespace dhs {

// An angle as a rational number of full turns (phi = 2*pi*turns),
// normalised into [0, 1) and stored in lowest terms.
class AngleTurns {
public:
    AngleTurns() = default;
    explicit AngleTurns(const Rational& turns);

    static AngleTurns from_fraction(const BigInt& num, const BigInt& den);

    const Rational& turns() const noexcept { return turns_; }
    BigInt numerator() const;
    BigInt denominator() const;

    AngleTurns doubled() const;   // 2*turns mod 1
    AngleTurns reflected() const; // (1 - turns) mod 1

    bool is_zero() const;
    bool is_half_turn() const;

    BigFloat radians() const;

    friend bool operator==(const AngleTurns&, const AngleTurns&) = default;

private:
    Rational turns_{0};
};

} // namespace dhs
