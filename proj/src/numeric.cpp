#include "dhs/numeric.hpp"

#include "dhs/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace dhs {

Rational normalize(BigInt numerator, BigInt denominator) {
    if (denominator == 0)
        throw invalid_parameter_error("division by zero");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    return Rational(numerator, denominator); // reduces via gcd
}

namespace {

BigInt parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw invalid_parameter_error("malformed rational: expected n or n/d");
    return BigInt(std::string(text));
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    return normalize(parse_integer(text.substr(0, slash)),
                     parse_integer(text.substr(slash + 1)));
}

std::string fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

BigFloat to_bigfloat(const Rational& value) {
    return BigFloat(value);
}

const BigFloat& pi() {
    static const BigFloat value = boost::math::constants::pi<BigFloat>();
    return value;
}

BigFloat cos_turns(const Rational& turns) {
    return cos(2 * pi() * to_bigfloat(turns));
}

BigFloat sin_turns(const Rational& turns) {
    return sin(2 * pi() * to_bigfloat(turns));
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    if (num % den != 0 && ((num < 0) != (den < 0)))
        --q;
    return q;
}

long long round_half_even(double x) {
    const double f = std::floor(x);
    const double frac = x - f;
    const auto n = static_cast<long long>(f);
    if (frac > 0.5)
        return n + 1;
    if (frac < 0.5)
        return n;
    return (n % 2 == 0) ? n : n + 1;
}

std::optional<Rational> reconstruct_rational(const BigFloat& x,
                                             const BigInt& max_den,
                                             const BigFloat& tol) {
    // Convergents p_k/q_k of the continued fraction of x.
    BigInt p_prev = 1, p_prev2 = 0;
    BigInt q_prev = 0, q_prev2 = 1;
    BigFloat rest = x;
    // 1e-80 as the "effectively integral" cutoff: far below tol but above
    // the representation noise of a 100-digit float.
    const BigFloat integral_cutoff("1e-80");

    for (int step = 0; step < 256; ++step) {
        const BigFloat fl = floor(rest);
        const BigInt a = fl.convert_to<BigInt>();
        BigInt p_k = a * p_prev + p_prev2;
        BigInt q_k = a * q_prev + q_prev2;
        if (q_k > max_den)
            break;
        const Rational candidate = normalize(p_k, q_k);
        if (abs(x - to_bigfloat(candidate)) <= tol)
            return candidate;
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p_k);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q_k);
        const BigFloat frac = rest - fl;
        if (frac < integral_cutoff)
            break;
        rest = 1 / frac;
    }
    return std::nullopt;
}

std::string decimal_string(const BigFloat& x, unsigned significant_digits) {
    std::ostringstream out;
    out << std::setprecision(static_cast<int>(significant_digits)) << x;
    return out.str();
}

std::string shortest_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace dhs
