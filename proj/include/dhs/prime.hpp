#pragma once

#include <cstdint>

namespace dhs {

// Deterministic Miller-Rabin, exact for all 64-bit inputs (the 12-witness
// base set is proven complete below 3.3e24).
bool is_prime(std::uint64_t n) noexcept;

// Smallest prime >= n. Throws invalid_parameter_error if none fits in 64 bits.
std::uint64_t next_prime_at_least(std::uint64_t n);

// Discretisation fineness: a prime strictly greater than 12, validated at
// construction. Machine-width by design; the model puts no upper bound on it.
class DiscretisationParam {
public:
    explicit DiscretisationParam(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    friend bool operator==(DiscretisationParam, DiscretisationParam) = default;

private:
    std::uint64_t p_;
};

} // namespace dhs
