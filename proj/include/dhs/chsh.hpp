#pragma once

#include "dhs/angle.hpp"
#include "dhs/numeric.hpp"
#include "dhs/prime.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace dhs {

struct SettingPair {
    int alice; // X: 0 or 1
    int bob;   // Y: 0 or 1
};

// Measurement direction on the unit sphere.
struct Direction {
    double colatitude;
    double longitude;
};

// Exact per-trial geometry: snapped cosines of the three relevant arcs
// (actual-to-actual, Bob actual-to-counterfactual, Alice
// actual-to-counterfactual) and the snapped vertex angle at Bob's actual
// direction between the arcs to Alice's actual and to Bob's counterfactual.
class TrialGeometry {
public:
    TrialGeometry(DiscretisationParam p, Rational cos_actual_pair, Rational cos_bob_pair,
                  Rational cos_alice_pair, AngleTurns vertex_angle_at_bob);

    DiscretisationParam param() const noexcept { return p_; }
    const Rational& cos_actual_pair() const noexcept { return cos_actual_pair_; }
    const Rational& cos_bob_pair() const noexcept { return cos_bob_pair_; }
    const Rational& cos_alice_pair() const noexcept { return cos_alice_pair_; }
    const AngleTurns& vertex_angle_at_bob() const noexcept { return vertex_angle_at_bob_; }

private:
    DiscretisationParam p_;
    Rational cos_actual_pair_;
    Rational cos_bob_pair_;
    Rational cos_alice_pair_;
    AngleTurns vertex_angle_at_bob_;
};

// Equatorial layout of the standard test: Alice actual at longitude 0,
// Alice counterfactual at pi/2, Bob actual at pi/4, Bob counterfactual at
// -pi/4 (the optimal CHSH orientations).
std::array<Direction, 4> standard_nominal_directions();

// Perturbs each nominal direction uniformly over a spherical cap of the
// given angular radius (seeded, deterministic), then snaps the pair cosines
// to the 2m/p - 1 lattice and the Bob vertex angle to the nearest 2*pi*n/p,
// stepping to the adjacent lattice point when a snap lands on a degenerate
// value.
TrialGeometry build_trial_geometry(DiscretisationParam p, const std::array<Direction, 4>& nominal,
                                   std::uint64_t jitter_seed, double jitter_radius = 1e-3);

enum class CellKind {
    Observed,        // the measurement actually performed
    Inferred,        // fixed by the partner's outcome (singlet anticorrelation)
    DefiniteUnknown, // definite in the model, value not inferable
    Undefined,       // inconsistent with the discretisation
};

struct CellState {
    CellKind kind;
    int sign; // +1/-1, meaningful for Observed and Inferred only
};

// One trial column; rows X=0, X=1, Y=0, Y=1.
using Column = std::array<CellState, 4>;

// Fills the four rows for one trial. The row of Bob's unchosen setting is
// Undefined exactly when the third-side classifier proves the double
// counterfactual has an irrational cosine, which it does for every
// conforming geometry. Throws invalid_parameter_error on nonconforming
// geometry or out-of-domain arguments.
Column fill_column(const TrialGeometry& g, SettingPair chosen, int alice_outcome,
                   int bob_outcome);

struct LookupTable {
    DiscretisationParam p;
    std::vector<Column> columns;

    std::uint64_t undefined_cell_count() const;
    Rational undefined_cell_fraction() const; // over all 4 * columns cells
    std::uint64_t complete_column_count() const;
};

// Runs seeded trials: fresh jittered geometry, uniformly chosen settings,
// outcomes sampled with the singlet weights (P(B = A) = (1 + E)/2).
LookupTable build_lookup_table(DiscretisationParam p, std::uint64_t n_trials,
                               std::uint64_t seed);

// Fraction of columns completable to four definite rows; exactly 0 in the
// discretised model.
Rational completability_scan(DiscretisationParam p, std::uint64_t n_trials, std::uint64_t seed);

// Discretised singlet correlation: -(2m/p - 1) with m the lattice rounding
// of p(1 + cos)/2; within 1/p of the quantum value -cos.
Rational singlet_correlation(DiscretisationParam p, double target_separation_cos);

// a0, a1, b0, b1 in radians.
std::array<double, 4> optimal_chsh_angles();

// E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1), exact.
Rational chsh_s_value(DiscretisationParam p, const std::array<double, 4>& angles);

struct ChshSupportCheck {
    bool decided;                 // false when the geometry is nonconforming
    std::string exception_reason; // set when undecided
    int rho_given_xy;
    int rho_given_xy_prime; // settings (X, 1-Y)
    bool violates_si;
};

// Support-level statistical-independence check for the CHSH trial: the
// hidden state consistent with settings (X, Y) is excluded under (X, 1-Y).
ChshSupportCheck si_violation_chsh(const TrialGeometry& g, SettingPair xy);

} // namespace dhs
