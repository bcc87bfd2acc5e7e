#include "dhs/chsh.hpp"

#include "dhs/errors.hpp"
#include "dhs/rng.hpp"
#include "dhs/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace dhs {

namespace {

struct Vec3 {
    double x, y, z;
};

Vec3 unit_vector(const Direction& d) {
    return {std::sin(d.colatitude) * std::cos(d.longitude),
            std::sin(d.colatitude) * std::sin(d.longitude), std::cos(d.colatitude)};
}

double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

// m = round(p(1+c)/2) stepped off the poles, so the snapped cosine is never +-1.
std::uint64_t snap_m_interior(std::uint64_t p, double c) {
    long long m = round_half_even(static_cast<double>(p) * (1.0 + c) / 2.0);
    m = std::clamp(m, 1ll, static_cast<long long>(p) - 1);
    return static_cast<std::uint64_t>(m);
}

Rational lattice_cos(std::uint64_t p, std::uint64_t m) {
    return normalize(BigInt(2) * m - BigInt(p), BigInt(p));
}

void check_outcome(int outcome) {
    if (outcome != 1 && outcome != -1)
        throw invalid_parameter_error("outcome must be +1 or -1");
}

void check_settings(SettingPair s) {
    if ((s.alice != 0 && s.alice != 1) || (s.bob != 0 && s.bob != 1))
        throw invalid_parameter_error("settings must be 0 or 1");
}

SphericalTriangle counterfactual_triangle(const TrialGeometry& g) {
    return SphericalTriangle(g.cos_actual_pair(), g.cos_bob_pair(), g.vertex_angle_at_bob());
}

} // namespace

TrialGeometry::TrialGeometry(DiscretisationParam p, Rational cos_actual_pair,
                             Rational cos_bob_pair, Rational cos_alice_pair,
                             AngleTurns vertex_angle_at_bob)
    : p_(p), cos_actual_pair_(std::move(cos_actual_pair)),
      cos_bob_pair_(std::move(cos_bob_pair)), cos_alice_pair_(std::move(cos_alice_pair)),
      vertex_angle_at_bob_(std::move(vertex_angle_at_bob)) {
    for (const Rational* c : {&cos_actual_pair_, &cos_bob_pair_, &cos_alice_pair_}) {
        if (abs(*c) >= 1)
            throw invalid_parameter_error("pair cosine must satisfy |c| < 1");
    }
    if (vertex_angle_at_bob_.is_zero() || vertex_angle_at_bob_.is_half_turn())
        throw invalid_parameter_error("vertex angle must not be 0 or half a turn");
}

std::array<Direction, 4> standard_nominal_directions() {
    constexpr double eq = std::numbers::pi / 2;
    return {{{eq, 0.0},                      // Alice actual (X = 0 role)
             {eq, std::numbers::pi / 2},     // Alice counterfactual
             {eq, std::numbers::pi / 4},     // Bob actual (Y = 0 role)
             {eq, -std::numbers::pi / 4}}};  // Bob counterfactual
}

TrialGeometry build_trial_geometry(DiscretisationParam p, const std::array<Direction, 4>& nominal,
                                   std::uint64_t jitter_seed) {
    SeededRng rng(jitter_seed);
    std::array<Vec3, 4> v;
    for (std::size_t i = 0; i < 4; ++i) {
        const Direction jittered{nominal[i].colatitude + rng.uniform(-1e-3, 1e-3),
                                 nominal[i].longitude + rng.uniform(-1e-3, 1e-3)};
        v[i] = unit_vector(jittered);
    }
    const Vec3& alice_actual = v[0];
    const Vec3& alice_cf = v[1];
    const Vec3& bob_actual = v[2];
    const Vec3& bob_cf = v[3];

    const std::uint64_t pv = p.value();
    const double c_actual = dot(alice_actual, bob_actual);
    const double c_bob = dot(bob_actual, bob_cf);
    const double c_alice = dot(alice_actual, alice_cf);

    // Vertex angle at Bob's actual direction, by the spherical cosine rule
    // on the true (pre-snap) positions.
    const double c_opposite = dot(alice_actual, bob_cf);
    const double sin_u = std::sqrt(std::max(0.0, 1.0 - c_actual * c_actual));
    const double sin_w = std::sqrt(std::max(0.0, 1.0 - c_bob * c_bob));
    double cos_vertex = (c_opposite - c_actual * c_bob) / (sin_u * sin_w);
    cos_vertex = std::clamp(cos_vertex, -1.0, 1.0);
    const double vertex_turns = std::acos(cos_vertex) / (2 * std::numbers::pi);

    long long n = round_half_even(static_cast<double>(pv) * vertex_turns);
    n = std::clamp(n, 1ll, static_cast<long long>(pv) - 1); // adjacent point when degenerate

    return TrialGeometry(p, lattice_cos(pv, snap_m_interior(pv, c_actual)),
                         lattice_cos(pv, snap_m_interior(pv, c_bob)),
                         lattice_cos(pv, snap_m_interior(pv, c_alice)),
                         AngleTurns::from_fraction(BigInt(n), BigInt(pv)));
}

Column fill_column(const TrialGeometry& g, SettingPair chosen, int alice_outcome,
                   int bob_outcome) {
    check_settings(chosen);
    check_outcome(alice_outcome);
    check_outcome(bob_outcome);

    std::string reason;
    if (third_side_kind(counterfactual_triangle(g), g.param(), &reason) !=
        ThirdSide::ProvablyIrrational)
        throw invalid_parameter_error("nonconforming geometry: " + reason);

    Column col{};
    col[static_cast<std::size_t>(chosen.alice)] = {CellKind::Observed, alice_outcome};
    col[static_cast<std::size_t>(1 - chosen.alice)] = {CellKind::DefiniteUnknown, 0};
    col[static_cast<std::size_t>(2 + chosen.bob)] = {CellKind::Inferred, -bob_outcome};
    col[static_cast<std::size_t>(2 + (1 - chosen.bob))] = {CellKind::Undefined, 0};
    return col;
}

std::uint64_t LookupTable::undefined_cell_count() const {
    std::uint64_t count = 0;
    for (const Column& col : columns)
        for (const CellState& cell : col)
            if (cell.kind == CellKind::Undefined)
                ++count;
    return count;
}

Rational LookupTable::undefined_cell_fraction() const {
    if (columns.empty())
        throw invalid_parameter_error("empty lookup table");
    return normalize(BigInt(undefined_cell_count()), BigInt(4) * columns.size());
}

std::uint64_t LookupTable::complete_column_count() const {
    std::uint64_t count = 0;
    for (const Column& col : columns) {
        bool complete = true;
        for (const CellState& cell : col)
            if (cell.kind == CellKind::Undefined)
                complete = false;
        if (complete)
            ++count;
    }
    return count;
}

LookupTable build_lookup_table(DiscretisationParam p, std::uint64_t n_trials,
                               std::uint64_t seed) {
    if (n_trials == 0)
        throw invalid_parameter_error("need at least one trial");
    SeededRng rng(seed);
    const auto nominal = standard_nominal_directions();
    LookupTable table{p, {}};
    table.columns.reserve(n_trials);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
        const TrialGeometry g = build_trial_geometry(p, nominal, rng.next());
        const SettingPair chosen{static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))};
        const int alice_outcome = rng.sign();
        // P(B = A) = (1 + E)/2 with E the trial's actual-pair correlation.
        const double e = -static_cast<double>(to_bigfloat(g.cos_actual_pair()));
        const int bob_outcome = rng.uniform01() < (1.0 + e) / 2.0 ? alice_outcome : -alice_outcome;
        table.columns.push_back(fill_column(g, chosen, alice_outcome, bob_outcome));
    }
    return table;
}

Rational completability_scan(DiscretisationParam p, std::uint64_t n_trials, std::uint64_t seed) {
    const LookupTable table = build_lookup_table(p, n_trials, seed);
    return normalize(BigInt(table.complete_column_count()), BigInt(n_trials));
}

Rational singlet_correlation(DiscretisationParam p, double target_separation_cos) {
    if (!(target_separation_cos >= -1.0 && target_separation_cos <= 1.0))
        throw invalid_parameter_error("target cosine out of range");
    const std::uint64_t pv = p.value();
    long long m =
        round_half_even(static_cast<double>(pv) * (1.0 + target_separation_cos) / 2.0);
    m = std::clamp(m, 0ll, static_cast<long long>(pv));
    return normalize(BigInt(pv) - BigInt(2) * m, BigInt(pv));
}

std::array<double, 4> optimal_chsh_angles() {
    return {0.0, std::numbers::pi / 2, std::numbers::pi / 4, -std::numbers::pi / 4};
}

Rational chsh_s_value(DiscretisationParam p, const std::array<double, 4>& angles) {
    const auto e = [&](int i, int j) {
        return singlet_correlation(p, std::cos(angles[i] - angles[2 + j]));
    };
    return e(0, 0) + e(0, 1) + e(1, 0) - e(1, 1);
}

ChshSupportCheck si_violation_chsh(const TrialGeometry& g, SettingPair xy) {
    check_settings(xy);
    std::string reason;
    if (third_side_kind(counterfactual_triangle(g), g.param(), &reason) !=
        ThirdSide::ProvablyIrrational)
        return {false, std::move(reason), 0, 0, false};
    // The actual world is consistent; the double counterfactual under
    // (X, 1-Y) requires a provably irrational third-side cosine.
    constexpr int rho_xy = 1;
    constexpr int rho_xy_prime = 0;
    require_invariant(!(rho_xy != 0 && rho_xy_prime != 0),
                      "hidden state supported under both setting pairs");
    return {true, {}, rho_xy, rho_xy_prime, rho_xy != rho_xy_prime};
}

} // namespace dhs
