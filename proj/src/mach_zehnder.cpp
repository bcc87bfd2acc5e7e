#include "dhs/mach_zehnder.hpp"

#include "dhs/errors.hpp"

namespace dhs {

PhaseSpec PhaseSpec::rational_turns(const AngleTurns& angle) {
    if (angle.is_zero())
        throw invalid_parameter_error("phase must be nonzero");
    const BigInt den = angle.denominator();
    if (den > BigInt(UINT64_MAX) || !is_prime(den.convert_to<std::uint64_t>()) || den <= 12)
        throw invalid_parameter_error("turns denominator must be a prime greater than 12");
    PhaseSpec spec;
    spec.is_turns_ = true;
    spec.turns_ = angle;
    return spec;
}

PhaseSpec PhaseSpec::rational_cosine(const Rational& cosine) {
    if (cosine > 1 || cosine < -1)
        throw invalid_parameter_error("cosine out of range");
    const Rational half(1, 2);
    if (cosine == 0 || cosine == half || cosine == -half || cosine == 1 || cosine == -1)
        throw invalid_parameter_error("cosine in the exceptional set {0, +-1/2, +-1}");
    PhaseSpec spec;
    spec.cosine_ = cosine;
    return spec;
}

const AngleTurns& PhaseSpec::turns() const {
    if (!is_turns_)
        throw invalid_parameter_error("phase is not in the rational-turns representation");
    return turns_;
}

const Rational& PhaseSpec::cosine() const {
    if (is_turns_)
        throw invalid_parameter_error("phase is not in the rational-cosine representation");
    return cosine_;
}

bool admissible(const PhaseSpec& phase, MZConfig config) {
    // Which-way needs the phase itself rational; interferometric needs the
    // cosine rational. The two variants split these cases exactly.
    return config == MZConfig::WhichWay ? phase.holds_rational_turns()
                                        : !phase.holds_rational_turns();
}

OutputProbabilities interferometer_probabilities(const PhaseSpec& phase) {
    if (phase.holds_rational_turns())
        throw invalid_parameter_error("inadmissible configuration");
    const Rational c = phase.cosine();
    return {(1 + c) / 2, (1 - c) / 2};
}

SupportCheck statistical_independence_check(const PhaseSpec& phase, MZConfig x) {
    const bool rho_x = admissible(phase, x);
    const bool rho_x_prime = admissible(phase, other(x));
    require_invariant(rho_x != rho_x_prime,
                      "phase admissible under both configurations or neither");
    return {rho_x ? 1 : 0, rho_x_prime ? 1 : 0, rho_x != rho_x_prime};
}

} // namespace dhs
