#include <algorithm>
#include <vector>

#include "dyadic/phase_diagram.hpp"

namespace dyadic {

PhaseDiagram enumerate_phase_diagram_reference(const Graph& g, std::int64_t n1,
                                               std::uint64_t budget)
{
    PhaseDiagram d;
    d.n1 = n1;
    d.total = checked_subset_count(g, n1, budget);

    const std::size_t n = g.node_count();
    const auto k = static_cast<std::size_t>(n1);
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i)
        pick[i] = i;
    std::vector<char> member(n, 0);

    for (;;) {
        std::fill(member.begin(), member.end(), 0);
        for (auto v : pick)
            member[v] = 1;
        std::int64_t m11 = 0, m10 = 0;
        for (auto [u, v] : g.edges()) {
            int ones = member[u] + member[v];
            m11 += ones == 2;
            m10 += ones == 1;
        }
        ++d.cells[{m10, m11}];

        // Lexicographic successor.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return d;
}

} // namespace dyadic
