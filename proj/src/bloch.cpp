#include "dhs/bloch.hpp"

#include "dhs/errors.hpp"

#include <algorithm>

namespace dhs {

DiscreteQubit::DiscreteQubit(DiscretisationParam p, std::uint64_t m, std::uint64_t n)
    : p_(p), m_(m), n_(n) {
    if (m > p.value())
        throw invalid_parameter_error("m out of range: require 0 <= m <= p");
    if (n > p.value())
        throw invalid_parameter_error("n out of range: require 0 <= n <= p");
    if (n_ == p.value())
        n_ = 0;
}

Rational DiscreteQubit::cos_theta() const {
    return normalize(BigInt(2) * m_ - BigInt(p_.value()), BigInt(p_.value()));
}

AngleTurns DiscreteQubit::phase() const {
    return AngleTurns::from_fraction(BigInt(n_), BigInt(p_.value()));
}

Amplitudes amplitudes(const DiscreteQubit& q) {
    const auto p = q.param().value();
    const BigFloat a0 = sqrt(BigFloat(q.m()) / p);
    const BigFloat mag = sqrt(BigFloat(p - q.m()) / p);
    const Rational turns = q.phase().turns();
    return {a0, mag * cos_turns(turns), mag * sin_turns(turns)};
}

BornProbabilities born_probabilities(const DiscreteQubit& q) {
    const BigInt p(q.param().value());
    return {normalize(BigInt(q.m()), p), normalize(p - q.m(), p)};
}

DiscreteQubit nearest_admissible(DiscretisationParam p, double target_cos_theta,
                                 double target_turns) {
    if (!(target_cos_theta >= -1.0 && target_cos_theta <= 1.0))
        throw invalid_parameter_error("target cos theta out of range");
    if (!(target_turns >= 0.0 && target_turns < 1.0))
        throw invalid_parameter_error("target turns out of range");
    const double pd = static_cast<double>(p.value());
    long long m = round_half_even(pd * (1.0 + target_cos_theta) / 2.0);
    m = std::clamp(m, 0ll, static_cast<long long>(p.value()));
    long long n = round_half_even(pd * target_turns);
    n %= static_cast<long long>(p.value());
    return DiscreteQubit(p, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
}

std::vector<DiscreteQubit> enumerate_grid(DiscretisationParam p) {
    if (p.value() > 10000)
        throw invalid_parameter_error("grid materialisation capped at p <= 10^4");
    std::vector<DiscreteQubit> grid;
    grid.reserve((p.value() + 1) * (p.value() + 1));
    for_each_state(p, [&](const DiscreteQubit& q) { grid.push_back(q); });
    return grid;
}

} // namespace dhs
