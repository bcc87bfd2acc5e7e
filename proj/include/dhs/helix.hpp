#pragma once

#include "dhs/numeric.hpp"
#include "dhs/padic.hpp"
#include "dhs/prime.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dhs {

// Nested-helix trajectory ensemble: p trajectories per fractal level, each
// labelled +1 or -1 by the measurement cluster it evolves into. A depth-L
// trajectory is identified by its length-L base-p digit path; refinement
// appends one digit. Trajectories are never materialised.
class HelixEnsemble {
public:
    struct Level {
        std::uint64_t plus_count; // entries labelled +1 at this level
        std::uint64_t rotation;   // cyclic offset at this level
    };

    static constexpr unsigned kMaxDepth = 8;

    HelixEnsemble(DiscretisationParam p, std::uint64_t plus_count, std::uint64_t rotation);

    DiscretisationParam param() const noexcept { return p_; }
    unsigned depth() const noexcept { return static_cast<unsigned>(levels_.size()); }
    std::uint64_t plus_count() const noexcept { return levels_.front().plus_count; }
    std::uint64_t rotation() const noexcept { return levels_.front().rotation; }
    const Level& level(unsigned i) const { return levels_.at(i); }

    // New ensemble one level deeper, each trajectory expanding into p
    // sub-trajectories with the given labelling. Throws past kMaxDepth.
    HelixEnsemble refine(std::uint64_t sub_plus_count, std::uint64_t sub_rotation = 0) const;

private:
    DiscretisationParam p_;
    std::vector<Level> levels_;
};

// Cluster label of top-level trajectory lambda: +1 iff
// (lambda - rotation) mod p < plus_count. Matches the ensemble bit string
// entry by entry.
int assign_cluster(const HelixEnsemble& e, std::uint64_t lambda_index);

// Exhaustive enumeration over all p values of lambda; the +1 fraction is
// exactly plus_count / p, with no sampling error.
Rational born_frequencies(const HelixEnsemble& e);

// Digit label of the trajectory reached by the given path (one digit per
// level). Path length must equal the ensemble depth.
PAdicLabel trajectory_label(const HelixEnsemble& e, std::span<const std::uint64_t> path);

} // namespace dhs
