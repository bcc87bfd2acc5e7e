#include "dhs/bitstring.hpp"

#include "dhs/errors.hpp"
#include "helpers.hpp"

#include "doctest.h"

using namespace dhs;

TEST_SUITE("bitstring") {

TEST_CASE("layout: m plus-ones then p-m minus-ones") {
    const BitString s(DiscretisationParam(17), 13);
    for (std::uint64_t i = 0; i < 13; ++i)
        CHECK(s.entry(i) == +1);
    for (std::uint64_t i = 13; i < 17; ++i)
        CHECK(s.entry(i) == -1);

    const auto all_minus = BitString(DiscretisationParam(13), 0).materialize();
    for (const signed char e : all_minus)
        CHECK(e == -1);
    const auto all_plus = BitString(DiscretisationParam(13), 13).materialize();
    for (const signed char e : all_plus)
        CHECK(e == +1);

    CHECK_THROWS_AS(BitString(DiscretisationParam(13), 14), invalid_parameter_error);
    CHECK_THROWS_AS(s.entry(17), invalid_parameter_error);
}

TEST_CASE("rotation is the cyclic group of order p") {
    const BitString s(DiscretisationParam(17), 13);
    CHECK(s.rotated(17) == s);
    CHECK(s.rotated(0) == s);

    SeededRng rng(8);
    for (int i = 0; i < 500; ++i) {
        const auto a = static_cast<std::int64_t>(rng.below(100)) - 50;
        const auto b = static_cast<std::int64_t>(rng.below(100)) - 50;
        CHECK(s.rotated(a).rotated(b) == s.rotated(a + b));
    }

    const BitString shifted = s.rotated(5);
    for (std::uint64_t i = 0; i < 17; ++i)
        CHECK(shifted.entry((i + 5) % 17) == s.entry(i));

    // order exactly p for non-constant strings
    for (std::int64_t k = 1; k < 17; ++k)
        CHECK(s.rotated(k) != s);

    // constant strings are fixed by every rotation
    const BitString constant(DiscretisationParam(17), 17);
    CHECK(constant.rotated(3) == constant);
}

TEST_CASE("mean by both routes") {
    const BitString s(DiscretisationParam(17), 13);
    CHECK(s.mean() == Rational(9, 17)); // (13 - 4)/17
    CHECK(s.mean_by_summation() == Rational(9, 17));

    CHECK(BitString(DiscretisationParam(13), 13).mean() == 1);
    CHECK(BitString(DiscretisationParam(13), 0).mean() == -1);
}

TEST_CASE("variance by both routes") {
    const BitString s(DiscretisationParam(17), 13);
    CHECK(s.variance() == Rational(208, 289)); // 1 - 81/289
    CHECK(s.variance_by_summation() == Rational(208, 289));

    CHECK(BitString(DiscretisationParam(13), 13).variance() == 0);
    CHECK(BitString(DiscretisationParam(17), 4).variance() == Rational(208, 289)); // m <-> p-m
}

TEST_CASE("summation equals closed form for every m at p in {13, 17, 101}") {
    for (const std::uint64_t pv : {13ull, 17ull, 101ull}) {
        const DiscretisationParam p(pv);
        for (std::uint64_t m = 0; m <= pv; ++m) {
            const BitString s = BitString(p, m).rotated(static_cast<std::int64_t>(m % pv));
            CHECK(s.mean_by_summation() == s.mean());
            CHECK(s.variance_by_summation() == s.variance());
        }
    }
}

TEST_CASE("rotation never changes the statistics") {
    SeededRng rng(14);
    const DiscretisationParam p(101);
    for (int i = 0; i < 300; ++i) {
        const BitString s(p, rng.below(102));
        const auto k = static_cast<std::int64_t>(rng.below(1000)) - 500;
        CHECK(s.rotated(k).mean() == s.mean());
        CHECK(s.rotated(k).variance_by_summation() == s.variance());
        CHECK(s.rotated(k).same_up_to_rotation(s));
    }
}

TEST_CASE("from_qubit carries the state statistics") {
    const DiscreteQubit q(DiscretisationParam(17), 13, 5);
    const BitString s = from_qubit(q);
    CHECK(s.offset() == 5);
    CHECK(s.mean() == Rational(9, 17));
    CHECK(s.mean() == q.cos_theta());

    const BitString north = from_qubit(DiscreteQubit(DiscretisationParam(13), 13, 0));
    for (std::uint64_t i = 0; i < 13; ++i)
        CHECK(north.entry(i) == +1);

    for_each_state(DiscretisationParam(13), [](const DiscreteQubit& state) {
        CHECK(from_qubit(state).mean_by_summation() == state.cos_theta());
    });
}

TEST_CASE("scaled entries carry hbar/2 statistics") {
    const ScaledBitString scaled{from_qubit(DiscreteQubit(DiscretisationParam(17), 13, 5)),
                                 Rational(1, 2)};
    CHECK(scaled.entry(0) == Rational(1, 2));
    CHECK(scaled.mean() == Rational(9, 34));
    CHECK(scaled.variance() == Rational(52, 289));
}

TEST_CASE("uncertainty product: equality at the poles") {
    const UncertaintyReport north = uncertainty_product(DiscreteQubit(DiscretisationParam(17), 17, 0));
    CHECK(north.lhs == BigFloat(1) / 4);
    CHECK(north.rhs == BigFloat(1) / 4);
    CHECK(north.holds);
    CHECK(north.equality);

    const UncertaintyReport south = uncertainty_product(DiscreteQubit(DiscretisationParam(17), 0, 3));
    CHECK(south.holds);
    CHECK(south.equality);
}

TEST_CASE("uncertainty product: strict away from the poles") {
    const UncertaintyReport near_equator =
        uncertainty_product(DiscreteQubit(DiscretisationParam(17), 8, 3));
    CHECK(near_equator.holds);
    CHECK_FALSE(near_equator.equality);
    CHECK(near_equator.lhs > near_equator.rhs);

    // phase 0 keeps the point on the x-z meridian, an exact equality case
    const UncertaintyReport meridian =
        uncertainty_product(DiscreteQubit(DiscretisationParam(17), 8, 0));
    CHECK(meridian.holds);
    CHECK(meridian.equality);
}

TEST_CASE("uncertainty product holds over the whole p = 17 grid") {
    for_each_state(DiscretisationParam(17), [](const DiscreteQubit& q) {
        CHECK(uncertainty_product(q).holds);
    });
}

TEST_CASE("complementarity: z and x outcomes cannot coexist") {
    const DiscretisationParam p(17);
    const auto verdict = complementarity_check(Rational(9, 17), Rational(0),
                                               AngleTurns(Rational(3, 17)), p);
    CHECK(verdict.provably_irrational());

    const auto exception = complementarity_check(Rational(9, 17), Rational(1, 3),
                                                 AngleTurns(Rational(1, 4)), p);
    CHECK(exception.kind == ThirdSide::ExceptionPossible);

    CHECK_THROWS_AS(
        complementarity_check(Rational(1), Rational(0), AngleTurns(Rational(3, 17)), p),
        invalid_parameter_error);
}

TEST_CASE("complementarity over random conforming inputs") {
    SeededRng rng(31);
    const DiscretisationParam p(17);
    for (int i = 0; i < 500; ++i) {
        const Rational cos_theta = test::random_interior_cosine(rng, 500);
        const Rational cos_sep = test::random_interior_cosine(rng, 500);
        const AngleTurns vertex(Rational(1 + rng.below(16), 17));
        CHECK(complementarity_check(cos_theta, cos_sep, vertex, p).provably_irrational());
    }
}

} // TEST_SUITE
