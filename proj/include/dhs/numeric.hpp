#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace dhs {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Working float type for all diagnostic numerics: ~100 significant decimal
// digits, so 50-digit displays and 1e-40 comparisons have ample headroom.
// Admissibility decisions never depend on BigFloat values.
using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Reduced fraction with positive denominator; the sign lives in the
// numerator. Throws invalid_parameter_error("division by zero") when
// denominator == 0.
Rational normalize(BigInt numerator, BigInt denominator);

// Parses "n", "n/d" or "-n/d". Throws invalid_parameter_error on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// Always "numerator/denominator", e.g. "9/17", "0/1", "-1/2".
std::string fraction_string(const Rational& value);

BigFloat to_bigfloat(const Rational& value);

// Reference access to the reduced parts (boost's free functions copy).
inline const BigInt& numerator_ref(const Rational& value) {
    return value.backend().data().numerator();
}
inline const BigInt& denominator_ref(const Rational& value) {
    return value.backend().data().denominator();
}

const BigFloat& pi();

// cos / sin of (2*pi*turns).
BigFloat cos_turns(const Rational& turns);
BigFloat sin_turns(const Rational& turns);

// Floor division with den > 0.
BigInt floor_div(const BigInt& num, const BigInt& den);

// Ties-to-even rounding, independent of the FPU rounding mode.
long long round_half_even(double x);

// Best rational with denominator <= max_den within tol of x, located by
// scanning continued-fraction convergents. Any rational that close to x
// with a bounded denominator must itself be a convergent, so nullopt
// falsifies every candidate below the bound at once.
std::optional<Rational> reconstruct_rational(const BigFloat& x,
                                             const BigInt& max_den,
                                             const BigFloat& tol);

std::string decimal_string(const BigFloat& x, unsigned significant_digits = 50);

// Shortest decimal that round-trips to the same double.
std::string shortest_double(double x);

} // namespace dhs
