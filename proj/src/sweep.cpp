#include "dhs/sweep.hpp"

#include "dhs/chsh.hpp"
#include "dhs/rng.hpp"

#include <cmath>

namespace dhs {

std::vector<SweepRow> run_sweep(const std::vector<std::uint64_t>& p_list,
                                std::uint64_t trials, std::uint64_t seed) {
    std::vector<SweepRow> rows;
    rows.reserve(p_list.size());
    SeededRng master(seed);
    const BigFloat tsirelson = 2 * sqrt(BigFloat(2));

    for (std::uint64_t pv : p_list) {
        const DiscretisationParam p(pv);
        const std::uint64_t table_seed = master.next();
        const std::uint64_t target_seed = master.next();

        const Rational s = chsh_s_value(p, optimal_chsh_angles());
        const BigFloat s_abs = abs(to_bigfloat(s));
        const double s_error = static_cast<double>(abs(s_abs - tsirelson));

        const Rational undefined_fraction =
            build_lookup_table(p, trials, table_seed).undefined_cell_fraction();

        // Correlation error over seeded random separations plus the four
        // optimal ones, against the quantum value -cos.
        SeededRng targets(target_seed);
        double max_error = 0.0;
        const auto record = [&](double c) {
            const double e = static_cast<double>(to_bigfloat(singlet_correlation(p, c)));
            max_error = std::max(max_error, std::abs(e - (-c)));
        };
        const auto angles = optimal_chsh_angles();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                record(std::cos(angles[i] - angles[2 + j]));
        for (std::uint64_t t = 0; t < trials; ++t)
            record(targets.uniform(-1.0, 1.0));

        rows.push_back({pv, static_cast<double>(s_abs), s_error, undefined_fraction, max_error});
    }
    return rows;
}

} // namespace dhs
