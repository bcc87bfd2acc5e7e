#include "dhs/bitstring.hpp"

#include "dhs/errors.hpp"

namespace dhs {

BitString::BitString(DiscretisationParam p, std::uint64_t plus_count)
    : p_(p), plus_count_(plus_count) {
    if (plus_count > p.value())
        throw invalid_parameter_error("plus count out of range: require 0 <= m <= p");
}

BitString BitString::rotated(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(p_.value());
    std::int64_t shifted = (static_cast<std::int64_t>(offset_) + n % p) % p;
    if (shifted < 0)
        shifted += p;
    BitString out = *this;
    out.offset_ = static_cast<std::uint64_t>(shifted);
    return out;
}

int BitString::entry(std::uint64_t index) const {
    const std::uint64_t p = p_.value();
    if (index >= p)
        throw invalid_parameter_error("entry index out of range");
    const std::uint64_t base_index = (index + p - offset_) % p;
    return base_index < plus_count_ ? +1 : -1;
}

std::vector<signed char> BitString::materialize() const {
    if (p_.value() > 1000000)
        throw invalid_parameter_error("materialisation capped at p <= 10^6");
    std::vector<signed char> entries(p_.value());
    for (std::uint64_t i = 0; i < p_.value(); ++i)
        entries[i] = static_cast<signed char>(entry(i));
    return entries;
}

Rational BitString::mean() const {
    return normalize(BigInt(2) * plus_count_ - BigInt(p_.value()), BigInt(p_.value()));
}

Rational BitString::variance() const {
    const Rational mu = mean();
    return 1 - mu * mu;
}

Rational BitString::mean_by_summation() const {
    std::int64_t sum = 0;
    for (std::uint64_t i = 0; i < p_.value(); ++i)
        sum += entry(i);
    return normalize(BigInt(sum), BigInt(p_.value()));
}

Rational BitString::variance_by_summation() const {
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    for (std::uint64_t i = 0; i < p_.value(); ++i) {
        const int e = entry(i);
        sum += e;
        sum_sq += e * e;
    }
    const Rational mu = normalize(BigInt(sum), BigInt(p_.value()));
    return normalize(BigInt(sum_sq), BigInt(p_.value())) - mu * mu;
}

bool BitString::same_up_to_rotation(const BitString& other) const {
    return p_ == other.p_ && plus_count_ == other.plus_count_;
}

bool operator==(const BitString& a, const BitString& b) {
    if (a.p_ != b.p_ || a.plus_count_ != b.plus_count_)
        return false;
    if (a.plus_count_ == 0 || a.plus_count_ == a.p_.value())
        return true; // constant string: every rotation is the same sequence
    return a.offset_ == b.offset_;
}

BitString from_qubit(const DiscreteQubit& q) {
    return BitString(q.param(), q.m()).rotated(static_cast<std::int64_t>(q.n()));
}

UncertaintyReport uncertainty_product(const DiscreteQubit& q) {
    const BigFloat cos_theta = to_bigfloat(q.cos_theta());
    const BigFloat theta = acos(cos_theta);
    const BigFloat phi = q.phase().radians();
    const Colatitudes col = orthogonal_colatitudes(theta, phi);
    const BigFloat sin_x = sqrt(1 - col.cos_theta_x * col.cos_theta_x);
    const BigFloat sin_y = sqrt(1 - col.cos_theta_y * col.cos_theta_y);
    const BigFloat scale = BigFloat(1) / 2; // hbar/2 with hbar = 1
    const BigFloat lhs = (scale * sin_x) * (scale * sin_y);
    const BigFloat rhs = scale * scale * abs(cos_theta);
    const bool holds = lhs >= rhs - BigFloat("1e-12");
    const bool equality = abs(lhs - rhs) < BigFloat("1e-30");
    return {lhs, rhs, holds, equality};
}

ThirdSideVerdict complementarity_check(const Rational& cos_theta,
                                       const Rational& cos_pole_separation,
                                       const AngleTurns& vertex_angle,
                                       const DiscretisationParam& p) {
    return classify_third_side(SphericalTriangle(cos_theta, cos_pole_separation, vertex_angle),
                               p);
}

} // namespace dhs
