#include "dhs/prime.hpp"

#include "dhs/errors.hpp"

#include <limits>

namespace dhs {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool witness_passes(std::uint64_t a, std::uint64_t d, unsigned r, std::uint64_t n) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!witness_passes(a, d, r, n))
            return false;
    }
    return true;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
    if (n <= 2)
        return 2;
    if (n % 2 == 0)
        ++n;
    for (; n >= 3; n += 2) {
        if (is_prime(n))
            return n;
        if (n > std::numeric_limits<std::uint64_t>::max() - 2)
            break;
    }
    throw invalid_parameter_error("no prime at or above n fits in 64 bits");
}

DiscretisationParam::DiscretisationParam(std::uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw invalid_parameter_error("not prime");
    if (p <= 12)
        throw invalid_parameter_error("p must exceed 12");
}

} // namespace dhs
