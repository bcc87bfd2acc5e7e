#include "dhs/spherical.hpp"

#include "dhs/errors.hpp"
#include "dhs/niven.hpp"

#include <utility>

namespace dhs {

namespace {

void check_cosine_range(const Rational& c) {
    if (abs(numerator_ref(c)) > denominator_ref(c))
        throw invalid_parameter_error("cosine out of range");
}

bool is_unit_cosine(const Rational& c) {
    return abs(numerator_ref(c)) == denominator_ref(c);
}

} // namespace

SphericalTriangle::SphericalTriangle(Rational cos_ac, Rational cos_bc, AngleTurns vertex_angle_c)
    : cos_ac_(std::move(cos_ac)), cos_bc_(std::move(cos_bc)),
      vertex_angle_c_(std::move(vertex_angle_c)) {
    check_cosine_range(cos_ac_);
    check_cosine_range(cos_bc_);
    if (is_unit_cosine(cos_ac_) || is_unit_cosine(cos_bc_) || vertex_angle_c_.is_zero() ||
        vertex_angle_c_.is_half_turn())
        throw invalid_parameter_error("degenerate");
}

BigFloat cosine_rule_numeric(const Rational& cos_ac, const Rational& cos_bc,
                             const BigFloat& cos_c) {
    check_cosine_range(cos_ac);
    check_cosine_range(cos_bc);
    if (cos_c > 1 || cos_c < -1)
        throw invalid_parameter_error("cosine out of range");
    const BigFloat ac = to_bigfloat(cos_ac);
    const BigFloat bc = to_bigfloat(cos_bc);
    const BigFloat sin_ac = sqrt(1 - ac * ac);
    const BigFloat sin_bc = sqrt(1 - bc * bc);
    return ac * bc + sin_ac * sin_bc * cos_c;
}

ThirdSide third_side_kind(const SphericalTriangle& t, const DiscretisationParam& p,
                          std::string* reason) {
    // The verdict is a mathematical claim; re-verify rather than trust the
    // caller (the constructor already rejects degenerate triangles).
    if (is_unit_cosine(t.cos_ac()) || is_unit_cosine(t.cos_bc()) ||
        t.vertex_angle_c().is_zero() || t.vertex_angle_c().is_half_turn())
        throw invalid_parameter_error("degenerate");

    if (denominator_ref(t.vertex_angle_c().turns()) != p.value()) {
        if (reason) {
            *reason = classify_cos(t.vertex_angle_c().doubled()).is_rational()
                          ? "Niven exception for 2c"
                          : "vertex angle is not of the form 2*pi*n/p";
        }
        return ThirdSide::ExceptionPossible;
    }
    return ThirdSide::ProvablyIrrational;
}

ThirdSideVerdict classify_third_side(const SphericalTriangle& t, const DiscretisationParam& p) {
    std::string reason;
    const ThirdSide kind = third_side_kind(t, p, &reason);
    BigFloat cos_ab =
        cosine_rule_numeric(t.cos_ac(), t.cos_bc(), cos_turns(t.vertex_angle_c().turns()));
    return {kind, std::move(reason), std::move(cos_ab)};
}

Colatitudes orthogonal_colatitudes(const BigFloat& theta, const BigFloat& phi) {
    const BigFloat sin_theta = sin(theta);
    return {cos(theta), sin_theta * cos(phi), sin_theta * sin(phi)};
}

} // namespace dhs
