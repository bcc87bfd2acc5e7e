#pragma once

#include "dhs/angle.hpp"
#include "dhs/niven.hpp"
#include "dhs/prime.hpp"

namespace dhs {

enum class MZConfig {
    Interferometric, // second mirror in place; needs cos(delta phi) rational
    WhichWay,        // second mirror removed; needs delta phi / 2 pi rational
};

constexpr MZConfig other(MZConfig c) {
    return c == MZConfig::Interferometric ? MZConfig::WhichWay : MZConfig::Interferometric;
}

// Phase difference between the interferometer arms, in one of the two
// representations the discretisation admits. A rational number of turns with
// a prime denominator > 12 has an irrational cosine; a rational cosine
// outside {0, +-1/2, +-1} belongs to an irrational number of turns. Each
// variant is therefore admissible for exactly one configuration.
class PhaseSpec {
public:
    // Requires a nonzero angle whose reduced denominator is a prime > 12.
    static PhaseSpec rational_turns(const AngleTurns& angle);

    // Requires |c| <= 1 and c outside the exceptional set {0, +-1/2, +-1}.
    static PhaseSpec rational_cosine(const Rational& cosine);

    bool holds_rational_turns() const noexcept { return is_turns_; }

    const AngleTurns& turns() const;  // rational-turns variant only
    const Rational& cosine() const;   // rational-cosine variant only

private:
    PhaseSpec() = default;

    bool is_turns_ = false;
    AngleTurns turns_{};
    Rational cosine_{};
};

bool admissible(const PhaseSpec& phase, MZConfig config);

struct OutputProbabilities {
    Rational at_a; // (1 + cos delta phi) / 2
    Rational at_b; // (1 - cos delta phi) / 2
};

// Exact output statistics for an interferometric run. Throws
// invalid_parameter_error("inadmissible configuration") for a
// rational-turns phase.
OutputProbabilities interferometer_probabilities(const PhaseSpec& phase);

struct SupportCheck {
    int rho_given_x;       // support indicator under the chosen configuration
    int rho_given_x_prime; // support indicator under the other configuration
    bool violates_si;      // the two indicators differ
};

// Support-level statistical-independence check: a hidden phase admissible
// under one configuration is excluded under the other.
SupportCheck statistical_independence_check(const PhaseSpec& phase, MZConfig x);

} // namespace dhs
