#include "dhs/chsh.hpp"

#include "dhs/errors.hpp"
#include "dhs/sweep.hpp"
#include "helpers.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace dhs;

namespace {

bool same_geometry(const TrialGeometry& a, const TrialGeometry& b) {
    return a.cos_actual_pair() == b.cos_actual_pair() && a.cos_bob_pair() == b.cos_bob_pair() &&
           a.cos_alice_pair() == b.cos_alice_pair() &&
           a.vertex_angle_at_bob() == b.vertex_angle_at_bob();
}

} // namespace

TEST_SUITE("chsh") {

TEST_CASE("trial geometry is deterministic per seed") {
    const DiscretisationParam p(17);
    const auto nominal = standard_nominal_directions();
    const TrialGeometry a = build_trial_geometry(p, nominal, 0);
    const TrialGeometry b = build_trial_geometry(p, nominal, 0);
    CHECK(same_geometry(a, b));

    bool any_different = false;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        if (!same_geometry(a, build_trial_geometry(p, nominal, seed)))
            any_different = true;
    CHECK(any_different);
}

TEST_CASE("snapping the pi/4 separation at p = 17 gives 13/17") {
    // 17 (1 + cos(pi/4 + O(1e-3))) / 2 stays within (14.4, 14.6), so m = 15
    // for every jitter draw.
    const DiscretisationParam p(17);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const TrialGeometry g = build_trial_geometry(p, standard_nominal_directions(), seed);
        CHECK(g.cos_actual_pair() == Rational(13, 17));
        CHECK(g.vertex_angle_at_bob().denominator() == 17);
    }
}

TEST_CASE("degenerate nominal directions still snap to a valid geometry") {
    // zero separation between Bob's actual and counterfactual directions
    const DiscretisationParam p(17);
    constexpr double eq = std::numbers::pi / 2;
    const std::array<Direction, 4> collapsed{
        {{eq, 0.0}, {eq, std::numbers::pi / 2}, {eq, std::numbers::pi / 4}, {eq, std::numbers::pi / 4}}};
    const TrialGeometry g = build_trial_geometry(p, collapsed, 3);
    CHECK(abs(g.cos_bob_pair()) < 1);
    CHECK_FALSE(g.vertex_angle_at_bob().is_zero());
}

TEST_CASE("geometry constructor rejects degenerate values") {
    const DiscretisationParam p(17);
    CHECK_THROWS_AS(TrialGeometry(p, Rational(1), Rational(13, 17), Rational(13, 17),
                                  AngleTurns(Rational(3, 17))),
                    invalid_parameter_error);
    CHECK_THROWS_AS(TrialGeometry(p, Rational(13, 17), Rational(13, 17), Rational(13, 17),
                                  AngleTurns(Rational(0))),
                    invalid_parameter_error);
}

TEST_CASE("column fill follows the walkthrough") {
    const DiscretisationParam p(17);
    const TrialGeometry g = build_trial_geometry(p, standard_nominal_directions(), 0);

    const Column col = fill_column(g, {0, 0}, +1, +1);
    CHECK(col[0].kind == CellKind::Observed);
    CHECK(col[0].sign == +1);
    CHECK(col[1].kind == CellKind::DefiniteUnknown);
    CHECK(col[2].kind == CellKind::Inferred);
    CHECK(col[2].sign == -1); // singlet anticorrelation
    CHECK(col[3].kind == CellKind::Undefined);

    const Column flipped = fill_column(g, {0, 0}, +1, -1);
    CHECK(flipped[2].sign == +1);

    CHECK_THROWS_AS(fill_column(g, {0, 2}, +1, +1), invalid_parameter_error);
    CHECK_THROWS_AS(fill_column(g, {0, 0}, 0, +1), invalid_parameter_error);
}

TEST_CASE("each of the four setting pairs leaves exactly one undefined cell") {
    const DiscretisationParam p(17);
    const TrialGeometry g = build_trial_geometry(p, standard_nominal_directions(), 5);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const Column col = fill_column(g, {x, y}, +1, -1);
            int undefined = 0;
            for (const CellState& cell : col)
                if (cell.kind == CellKind::Undefined)
                    ++undefined;
            CHECK(undefined == 1);
            CHECK(col[static_cast<std::size_t>(2 + (1 - y))].kind == CellKind::Undefined);
            CHECK(col[static_cast<std::size_t>(x)].kind == CellKind::Observed);
        }
}

TEST_CASE("nonconforming geometry is rejected, not guessed at") {
    const DiscretisationParam p(17);
    const TrialGeometry bad(p, Rational(13, 17), Rational(13, 17), Rational(13, 17),
                            AngleTurns(Rational(1, 4)));
    CHECK_THROWS_AS(fill_column(bad, {0, 0}, +1, +1), invalid_parameter_error);

    const ChshSupportCheck check = si_violation_chsh(bad, {0, 0});
    CHECK_FALSE(check.decided);
    CHECK(check.exception_reason == "Niven exception for 2c");
}

TEST_CASE("singlet correlation snaps the quantum value") {
    const DiscretisationParam p17(17);
    CHECK(singlet_correlation(p17, 1.0) == -1); // perfect anticorrelation
    CHECK(singlet_correlation(DiscretisationParam(10007), 1.0) == -1);
    CHECK(singlet_correlation(p17, 0.0) == Rational(1, 17)); // ties-to-even at m = 8

    const double target = std::sqrt(2.0) / 2.0;
    const Rational e = singlet_correlation(DiscretisationParam(10007), target);
    CHECK(std::abs(static_cast<double>(to_bigfloat(e)) + target) <= 1.0 / 10007.0);

    CHECK_THROWS_AS(singlet_correlation(p17, 1.5), invalid_parameter_error);
}

TEST_CASE("S at the optimal orientations, exact at p = 13") {
    // all four separations snap to cosine 9/13, so S = -36/13
    const Rational s = chsh_s_value(DiscretisationParam(13), optimal_chsh_angles());
    CHECK(s == parse_rational("-36/13"));
}

TEST_CASE("coincident orientations give the classical bound exactly") {
    const std::array<double, 4> same{0.7, 0.7, 0.7, 0.7};
    CHECK(chsh_s_value(DiscretisationParam(17), same) == -2);
}

TEST_CASE("|S| approaches the Tsirelson bound at rate 4/p") {
    const BigFloat tsirelson = 2 * sqrt(BigFloat(2));
    for (const std::uint64_t pv : {13ull, 17ull, 101ull, 1009ull, 10007ull}) {
        const Rational s = chsh_s_value(DiscretisationParam(pv), optimal_chsh_angles());
        const BigFloat s_abs = abs(to_bigfloat(s));
        CHECK(abs(s_abs - tsirelson) <= BigFloat(4) / pv);
        CHECK(s_abs > 2); // Bell violation at every p
        CHECK(abs(s) <= 4);
    }
}

TEST_CASE("support-level SI violation for conforming geometry") {
    const DiscretisationParam p(17);
    const TrialGeometry g = build_trial_geometry(p, standard_nominal_directions(), 7);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const ChshSupportCheck check = si_violation_chsh(g, {x, y});
            CHECK(check.decided);
            CHECK(check.rho_given_xy == 1);
            CHECK(check.rho_given_xy_prime == 0);
            CHECK(check.violates_si);
        }
}

TEST_CASE("lookup tables always carry one blank per column") {
    const LookupTable table = build_lookup_table(DiscretisationParam(17), 200, 1);
    CHECK(table.columns.size() == 200);
    CHECK(table.undefined_cell_count() == 200);
    CHECK(table.undefined_cell_fraction() == Rational(1, 4));
    CHECK(table.complete_column_count() == 0);
}

TEST_CASE("completability scans return exactly zero") {
    CHECK(completability_scan(DiscretisationParam(13), 10, 0) == 0);
    CHECK(completability_scan(DiscretisationParam(17), 100, 1) == 0);
    CHECK_THROWS_AS(completability_scan(DiscretisationParam(17), 0, 1),
                    invalid_parameter_error);
}

TEST_CASE("lookup table construction is deterministic per seed") {
    const LookupTable a = build_lookup_table(DiscretisationParam(17), 50, 9);
    const LookupTable b = build_lookup_table(DiscretisationParam(17), 50, 9);
    REQUIRE(a.columns.size() == b.columns.size());
    for (std::size_t i = 0; i < a.columns.size(); ++i)
        for (std::size_t r = 0; r < 4; ++r) {
            CHECK(a.columns[i][r].kind == b.columns[i][r].kind);
            CHECK(a.columns[i][r].sign == b.columns[i][r].sign);
        }
}

TEST_CASE("sweep rows show the singular-limit signature") {
    const std::vector<std::uint64_t> ps{17, 101};
    const auto rows = run_sweep(ps, 50, 3);
    REQUIRE(rows.size() == 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].p == ps[i]);
        CHECK(rows[i].undefined_cell_fraction == Rational(1, 4));
        CHECK(rows[i].correlation_max_error <= 1.0 / static_cast<double>(ps[i]));
        CHECK(rows[i].s_error <= 4.0 / static_cast<double>(ps[i]));
    }
    CHECK(rows[1].s_error < rows[0].s_error);
    CHECK(rows[1].correlation_max_error < rows[0].correlation_max_error);
}

} // TEST_SUITE
