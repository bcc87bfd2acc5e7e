#pragma once

#include "dhs/angle.hpp"
#include "dhs/prime.hpp"

#include <string>

namespace dhs {

// Non-degenerate triangle on the unit sphere, described by the exact cosines
// of the two sides meeting at vertex C and the vertex angle there.
class SphericalTriangle {
public:
    // Throws invalid_parameter_error on out-of-range cosines ("cosine out of
    // range") or a degenerate configuration ("degenerate"): side cosine +-1,
    // or vertex angle 0 or half a turn.
    SphericalTriangle(Rational cos_ac, Rational cos_bc, AngleTurns vertex_angle_c);

    const Rational& cos_ac() const noexcept { return cos_ac_; }
    const Rational& cos_bc() const noexcept { return cos_bc_; }
    const AngleTurns& vertex_angle_c() const noexcept { return vertex_angle_c_; }

private:
    Rational cos_ac_;
    Rational cos_bc_;
    AngleTurns vertex_angle_c_;
};

enum class ThirdSide {
    ProvablyIrrational, // cos AB cannot be rational
    ExceptionPossible,  // preconditions not met; no claim made
};

struct ThirdSideVerdict {
    ThirdSide kind;
    std::string reason; // empty when provably irrational
    BigFloat numeric_cos_ab;

    bool provably_irrational() const noexcept { return kind == ThirdSide::ProvablyIrrational; }
};

// cos AB = cos AC cos BC + sin AC sin BC cos c, with sin = +sqrt(1 - cos^2).
BigFloat cosine_rule_numeric(const Rational& cos_ac, const Rational& cos_bc, const BigFloat& cos_c);

// Decision path alone (no numerics). ProvablyIrrational is emitted only when
// the preconditions are machine-checked here: both side cosines rational and
// non-degenerate, and the vertex angle of the form 2*pi*n/p for the given
// prime p > 12. Doubling such an angle keeps a denominator > 12, so cos 2c
// escapes the rational-cosine exceptional set and the cosine-rule argument
// goes through.
ThirdSide third_side_kind(const SphericalTriangle& t, const DiscretisationParam& p,
                          std::string* reason = nullptr);

ThirdSideVerdict classify_third_side(const SphericalTriangle& t, const DiscretisationParam& p);

struct Colatitudes {
    BigFloat cos_theta;   // against the z pole
    BigFloat cos_theta_x; // against the x pole (equator, longitude 0)
    BigFloat cos_theta_y; // against the y pole (equator, longitude pi/2)
};

// Colatitudes of the point (theta, phi) with respect to three mutually
// orthogonal poles. Satisfies |sin theta_x| * |sin theta_y| >= |cos theta|.
Colatitudes orthogonal_colatitudes(const BigFloat& theta, const BigFloat& phi);

} // namespace dhs
