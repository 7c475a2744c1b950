#include "nakayama/bridge.hpp"

#include <algorithm>

namespace nakayama {

DyckPath kupisch_to_dyck(const KupischSeries& series) {
    const int n = series.simples() - 1;
    std::vector<int> h(static_cast<std::size_t>(2 * n + 1), 0);
    for (int x = 0; x <= 2 * n; ++x) {
        int best = 0;
        for (int i = 0; i <= n && 2 * i <= x; ++i) {
            const int y = x - 2 * i;
            if (series[i] >= y + 1)
                best = std::max(best, y);
        }
        h[static_cast<std::size_t>(x)] = best;
    }
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(2 * n));
    for (int x = 0; x < 2 * n; ++x)
        steps.push_back(h[static_cast<std::size_t>(x + 1)] > h[static_cast<std::size_t>(x)]
                            ? Step::Up
                            : Step::Down);
    return DyckPath::from_steps(std::move(steps));
}

KupischSeries dyck_to_kupisch(const DyckPath& path) {
    const int n = path.semilength();
    const std::vector<int> h = height_profile(path);
    std::vector<int> entries(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        int best = 0;
        for (int y = 0; 2 * i + y <= 2 * n; ++y)
            if (h[static_cast<std::size_t>(2 * i + y)] >= y)
                best = std::max(best, y);
        entries[static_cast<std::size_t>(i)] = 1 + best;
    }
    return KupischSeries::validate(std::move(entries));
}

KupischSeries algebra_for_permutation(const Permutation& p) {
    return dyck_to_kupisch(bjs_inverse(p));
}

} // namespace nakayama
