#include "dhs/helix.hpp"

#include "dhs/errors.hpp"

namespace dhs {

namespace {

void check_level(const DiscretisationParam& p, std::uint64_t plus_count,
                 std::uint64_t rotation) {
    if (plus_count > p.value())
        throw invalid_parameter_error("plus count out of range: require 0 <= m <= p");
    if (rotation >= p.value())
        throw invalid_parameter_error("rotation out of range: require 0 <= n < p");
}

} // namespace

HelixEnsemble::HelixEnsemble(DiscretisationParam p, std::uint64_t plus_count,
                             std::uint64_t rotation)
    : p_(p) {
    check_level(p, plus_count, rotation);
    levels_.push_back({plus_count, rotation});
}

HelixEnsemble HelixEnsemble::refine(std::uint64_t sub_plus_count,
                                    std::uint64_t sub_rotation) const {
    if (depth() >= kMaxDepth)
        throw invalid_parameter_error("depth cap exceeded");
    check_level(p_, sub_plus_count, sub_rotation);
    HelixEnsemble deeper = *this;
    deeper.levels_.push_back({sub_plus_count, sub_rotation});
    return deeper;
}

int assign_cluster(const HelixEnsemble& e, std::uint64_t lambda_index) {
    const std::uint64_t p = e.param().value();
    if (lambda_index >= p)
        throw invalid_parameter_error("trajectory index out of range");
    const std::uint64_t base_index = (lambda_index + p - e.rotation()) % p;
    return base_index < e.plus_count() ? +1 : -1;
}

Rational born_frequencies(const HelixEnsemble& e) {
    const std::uint64_t p = e.param().value();
    std::uint64_t plus = 0;
    for (std::uint64_t lambda = 0; lambda < p; ++lambda)
        if (assign_cluster(e, lambda) == +1)
            ++plus;
    return normalize(BigInt(plus), BigInt(p));
}

PAdicLabel trajectory_label(const HelixEnsemble& e, std::span<const std::uint64_t> path) {
    if (path.size() != e.depth())
        throw invalid_parameter_error("path length must equal the ensemble depth");
    return PAdicLabel(e.param(), std::vector<std::uint64_t>(path.begin(), path.end()));
}

} // namespace dhs
