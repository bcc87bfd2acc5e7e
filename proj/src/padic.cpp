#include "dhs/padic.hpp"

#include "dhs/errors.hpp"

#include <cmath>
#include <utility>

namespace dhs {

std::optional<unsigned> valuation(const BigInt& x, const DiscretisationParam& p) {
    if (x == 0)
        return std::nullopt;
    BigInt rest = abs(x);
    const BigInt prime(p.value());
    unsigned k = 0;
    while (rest % prime == 0) {
        rest /= prime;
        ++k;
    }
    return k;
}

PAdicLabel::PAdicLabel(DiscretisationParam p, std::vector<std::uint64_t> digits)
    : p_(p), digits_(std::move(digits)) {
    if (digits_.empty())
        throw invalid_parameter_error("label needs at least one digit");
    for (std::uint64_t d : digits_)
        if (d >= p.value())
            throw invalid_parameter_error("digit out of range: require 0 <= d < p");
}

PAdicLabel PAdicLabel::extended(std::uint64_t next_digit) const {
    std::vector<std::uint64_t> digits = digits_;
    digits.push_back(next_digit);
    return PAdicLabel(p_, std::move(digits));
}

bool operator==(const PAdicLabel& a, const PAdicLabel& b) {
    return a.p_ == b.p_ && a.digits_ == b.digits_;
}

Rational label_distance(const PAdicLabel& a, const PAdicLabel& b) {
    if (a.param() != b.param())
        throw invalid_parameter_error("labels have different p");
    if (a.depth() != b.depth())
        throw invalid_parameter_error("labels have different depth");
    for (std::size_t level = 0; level < a.depth(); ++level) {
        if (a.digit(level) != b.digit(level)) {
            return normalize(BigInt(1), pow(BigInt(a.param().value()),
                                            static_cast<unsigned>(level) + 1));
        }
    }
    return Rational(0);
}

StatePoint::StatePoint(DiscretisationParam p, std::vector<double> embedding,
                       std::optional<PAdicLabel> label)
    : p_(p), embedding_(std::move(embedding)), label_(std::move(label)) {
    if (embedding_.empty())
        throw invalid_parameter_error("embedding needs at least one coordinate");
}

StatePoint StatePoint::on_set(std::vector<double> embedding, PAdicLabel label) {
    const DiscretisationParam p = label.param();
    return StatePoint(p, std::move(embedding), std::move(label));
}

StatePoint StatePoint::off_set(DiscretisationParam p, std::vector<double> embedding) {
    return StatePoint(p, std::move(embedding), std::nullopt);
}

const PAdicLabel& StatePoint::label() const {
    if (!label_)
        throw invalid_parameter_error("point is off the invariant set");
    return *label_;
}

Rational state_distance(const StatePoint& x, const StatePoint& y) {
    if (x.param() != y.param())
        throw invalid_parameter_error("points have different p");
    if (x.on_invariant_set() && y.on_invariant_set())
        return label_distance(x.label(), y.label());
    if (!x.on_invariant_set() && !y.on_invariant_set() && x.embedding() == y.embedding())
        return Rational(0); // the identical point
    return Rational(x.param().value());
}

double euclidean_distance(const StatePoint& x, const StatePoint& y) {
    if (x.embedding().size() != y.embedding().size())
        throw invalid_parameter_error("embedding dimensions differ");
    double sum = 0;
    for (std::size_t i = 0; i < x.embedding().size(); ++i) {
        const double d = x.embedding()[i] - y.embedding()[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

FineTuningReport fine_tuning_demo(const StatePoint& x, double epsilon) {
    if (!x.on_invariant_set())
        throw invalid_parameter_error("demo point must lie on the invariant set");
    if (!(epsilon > 0))
        throw invalid_parameter_error("epsilon must be positive");
    std::vector<double> nudged = x.embedding();
    nudged[0] += epsilon / 2;
    const StatePoint y = StatePoint::off_set(x.param(), std::move(nudged));
    const double euclid = euclidean_distance(x, y);
    const Rational state = state_distance(x, y);
    const double p = static_cast<double>(x.param().value());
    return {euclid, state, p / euclid, p / epsilon, p / euclid >= p / epsilon};
}

} // namespace dhs
