#pragma once

#include "dhs/numeric.hpp"
#include "dhs/prime.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dhs {

// Largest k with p^k | x; nullopt (infinite) for x = 0.
std::optional<unsigned> valuation(const BigInt& x, const DiscretisationParam& p);

// Base-p digit path identifying a point of the invariant set down to a fixed
// fractal depth; digit 0 is the coarsest level.
class PAdicLabel {
public:
    PAdicLabel(DiscretisationParam p, std::vector<std::uint64_t> digits);

    DiscretisationParam param() const noexcept { return p_; }
    std::size_t depth() const noexcept { return digits_.size(); }
    std::uint64_t digit(std::size_t level) const { return digits_.at(level); }
    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }

    PAdicLabel extended(std::uint64_t next_digit) const;

    friend bool operator==(const PAdicLabel&, const PAdicLabel&);

private:
    DiscretisationParam p_;
    std::vector<std::uint64_t> digits_;
};

// p^-(k+1) with k the first differing level; 0 when all digits agree.
// Always < 1. Throws on mismatched p or depth.
Rational label_distance(const PAdicLabel& a, const PAdicLabel& b);

// A state-space point: Euclidean embedding coordinates (for Euclidean
// comparison only) plus, for points on the invariant set, a digit label.
// On-set points are identified by their labels at the configured depth;
// off-set points by their embeddings.
class StatePoint {
public:
    static StatePoint on_set(std::vector<double> embedding, PAdicLabel label);
    static StatePoint off_set(DiscretisationParam p, std::vector<double> embedding);

    bool on_invariant_set() const noexcept { return label_.has_value(); }
    const std::vector<double>& embedding() const noexcept { return embedding_; }
    const PAdicLabel& label() const;
    DiscretisationParam param() const noexcept { return p_; }

private:
    StatePoint(DiscretisationParam p, std::vector<double> embedding,
               std::optional<PAdicLabel> label);

    DiscretisationParam p_;
    std::vector<double> embedding_;
    std::optional<PAdicLabel> label_;
};

// The state-space metric: label distance (< 1) when both points lie on the
// invariant set, 0 for identical points, and p in every other situation.
Rational state_distance(const StatePoint& x, const StatePoint& y);

double euclidean_distance(const StatePoint& x, const StatePoint& y);

struct FineTuningReport {
    double euclidean_dist;   // <= epsilon by construction
    Rational state_dist;     // exactly p
    double ratio;            // state over Euclidean
    double required_ratio;   // p / epsilon
    bool holds;              // ratio >= required_ratio
};

// Constructs an off-set point within epsilon (Euclidean) of the given
// on-set point and reports how far apart the state metric keeps them.
// Deterministic.
FineTuningReport fine_tuning_demo(const StatePoint& x, double epsilon);

} // namespace dhs
