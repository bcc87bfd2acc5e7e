#include "dhs/angle.hpp"

namespace dhs {

AngleTurns::AngleTurns(const Rational& turns) {
    const BigInt whole = floor_div(boost::multiprecision::numerator(turns),
                                   boost::multiprecision::denominator(turns));
    turns_ = turns - Rational(whole);
}

AngleTurns AngleTurns::from_fraction(const BigInt& num, const BigInt& den) {
    return AngleTurns(normalize(num, den));
}

BigInt AngleTurns::numerator() const {
    return boost::multiprecision::numerator(turns_);
}

BigInt AngleTurns::denominator() const {
    return boost::multiprecision::denominator(turns_);
}

AngleTurns AngleTurns::doubled() const {
    return AngleTurns(turns_ * 2);
}

AngleTurns AngleTurns::reflected() const {
    return AngleTurns(1 - turns_);
}

bool AngleTurns::is_zero() const {
    return numerator_ref(turns_) == 0;
}

bool AngleTurns::is_half_turn() const {
    return denominator_ref(turns_) == 2; // reduced: only 1/2 qualifies
}

BigFloat AngleTurns::radians() const {
    return 2 * pi() * to_bigfloat(turns_);
}

} // namespace dhs
