#pragma once

#include "dhs/angle.hpp"
#include "dhs/numeric.hpp"
#include "dhs/prime.hpp"

#include <cstdint>
#include <vector>

namespace dhs {

// One point (p, m, n) of the discretised Bloch sphere:
// cos^2(theta/2) = m/p and phase = 2*pi*n/p, with 0 <= m, n <= p.
// n = p is the full turn and normalises to n = 0.
class DiscreteQubit {
public:
    DiscreteQubit(DiscretisationParam p, std::uint64_t m, std::uint64_t n);

    DiscretisationParam param() const noexcept { return p_; }
    std::uint64_t m() const noexcept { return m_; }
    std::uint64_t n() const noexcept { return n_; }

    Rational cos_theta() const; // 2m/p - 1
    AngleTurns phase() const;   // n/p

    friend bool operator==(const DiscreteQubit&, const DiscreteQubit&) = default;

private:
    DiscretisationParam p_;
    std::uint64_t m_;
    std::uint64_t n_;
};

struct Amplitudes {
    BigFloat a0;    // cos(theta/2) = sqrt(m/p) >= 0
    BigFloat a1_re; // sqrt((p-m)/p) cos(2 pi n/p)
    BigFloat a1_im; // sqrt((p-m)/p) sin(2 pi n/p)
};

Amplitudes amplitudes(const DiscreteQubit& q);

struct BornProbabilities {
    Rational p0; // m/p
    Rational p1; // (p-m)/p
};

BornProbabilities born_probabilities(const DiscreteQubit& q);

// Snap a target (cos theta, phase turns) to the closest grid state using
// ties-to-even rounding. Guarantees |2m/p - 1 - cos| <= 1/p and cyclic
// phase error |n/p - turns| <= 1/(2p).
DiscreteQubit nearest_admissible(DiscretisationParam p, double target_cos_theta,
                                 double target_turns);

// Visit all (p+1)^2 grid states in lexicographic (m, n) order.
template <typename F>
void for_each_state(DiscretisationParam p, F&& visit) {
    for (std::uint64_t m = 0; m <= p.value(); ++m)
        for (std::uint64_t n = 0; n <= p.value(); ++n)
            visit(DiscreteQubit(p, m, n));
}

// Materialised grid; capped at p <= 10^4 to bound memory.
std::vector<DiscreteQubit> enumerate_grid(DiscretisationParam p);

} // namespace dhs
