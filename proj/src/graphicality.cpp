#include "dyadic/graphicality.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace dyadic {

bool erdos_gallai_graphic(std::span<const std::int64_t> sequence)
{
    std::vector<std::int64_t> d(sequence.begin(), sequence.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    if (n == 0)
        return true;
    if (d.back() < 0 || d.front() > n - 1)
        return false;

    std::int64_t total = 0;
    for (auto x : d)
        total += x;
    if (total % 2 != 0)
        return false;

    // sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i)
    std::int64_t lhs = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        std::int64_t rhs = k * (k - 1);
        for (std::int64_t i = k; i < n; ++i)
            rhs += std::min(k, d[i]);
        if (lhs > rhs)
            return false;
    }
    return true;
}

} // namespace dyadic
