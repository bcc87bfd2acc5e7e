#pragma once

#include "dhs/bloch.hpp"
#include "dhs/spherical.hpp"

#include <cstdint>
#include <vector>

namespace dhs {

// S(n, m): a cyclic string of p labels, m of them +1 and p-m of them -1,
// rotated by n. Stored as (p, m, offset); entries are computed on demand so
// that statistics stay O(p) in time and O(1) in memory at any p.
class BitString {
public:
    // Offset 0 layout: m entries +1 followed by p-m entries -1.
    BitString(DiscretisationParam p, std::uint64_t plus_count);

    BitString rotated(std::int64_t n) const;

    int entry(std::uint64_t index) const; // +1 or -1

    // Explicit length-p sequence; capped at p <= 10^6 to bound memory.
    std::vector<signed char> materialize() const;

    DiscretisationParam param() const noexcept { return p_; }
    std::uint64_t plus_count() const noexcept { return plus_count_; }
    std::uint64_t offset() const noexcept { return offset_; }

    Rational mean() const;     // closed form (2m - p)/p
    Rational variance() const; // closed form 1 - mean^2

    // Independent O(p) routes: literal sums over the entries. The acceptance
    // suite checks these against the closed forms with zero tolerance.
    Rational mean_by_summation() const;
    Rational variance_by_summation() const;

    // Same entries up to a cyclic permutation, i.e. same (p, m).
    bool same_up_to_rotation(const BitString& other) const;

    // Sequence equality. For 0 < m < p distinct offsets give distinct
    // sequences (p is prime); constant strings compare equal at any offset.
    friend bool operator==(const BitString& a, const BitString& b);

private:
    DiscretisationParam p_;
    std::uint64_t plus_count_;
    std::uint64_t offset_ = 0;
};

BitString from_qubit(const DiscreteQubit& q);

// Bit string whose entries carry a physical scale: +-scale instead of +-1.
// The default scale is 1/2, i.e. hbar/2 with hbar = 1.
struct ScaledBitString {
    BitString base;
    Rational scale{1, 2};

    Rational entry(std::uint64_t index) const { return base.entry(index) * scale; }
    Rational mean() const { return scale * base.mean(); }
    Rational variance() const { return scale * scale * base.variance(); }
};

struct UncertaintyReport {
    BigFloat lhs;  // (scale |sin theta'|) * (scale |sin theta''|)
    BigFloat rhs;  // scale^2 |cos theta|
    bool holds;    // lhs >= rhs - 1e-12
    bool equality; // |lhs - rhs| < 1e-30 (analytic at the poles)
};

// Spread product against two orthogonal equatorial directions versus the
// mean against the pole, in hbar/2 units.
UncertaintyReport uncertainty_product(const DiscreteQubit& q);

// A point with rational cos theta against one pole cannot also have a
// rational cosine against a second direction a rational-cosine arc away,
// when the vertex angle between the two arcs is of the form 2*pi*n/p.
// Delegates to the third-side classifier.
ThirdSideVerdict complementarity_check(const Rational& cos_theta,
                                       const Rational& cos_pole_separation,
                                       const AngleTurns& vertex_angle,
                                       const DiscretisationParam& p);

} // namespace dhs
