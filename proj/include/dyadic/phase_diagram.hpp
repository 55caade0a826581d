#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "dyadic/graph.hpp"

namespace dyadic {

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 28;

// Cell key (m10, m11); the map order is the CSV row order.
using PhaseCell = std::pair<std::int64_t, std::int64_t>;

struct PhaseDiagram {
    std::int64_t n1 = 0;
    std::map<PhaseCell, std::uint64_t> cells;  // (m10, m11) -> degeneracy
    std::uint64_t total = 0;                   // C(N, n1)

    friend bool operator==(const PhaseDiagram&, const PhaseDiagram&) = default;
};

struct EnumerationOptions {
    std::uint64_t budget = default_enumeration_budget;
    int workers = 0;  // 0: OpenMP default
};

struct DyadExtrema {
    std::int64_t min_m11 = 0, max_m11 = 0;
    std::int64_t min_m10 = 0, max_m10 = 0;
    friend bool operator==(const DyadExtrema&, const DyadExtrema&) = default;
};

// C(N, n1); throws Error(range) for n1 outside [0, N] and Error(budget)
// when the count exceeds the budget.
std::uint64_t checked_subset_count(const Graph& g, std::int64_t n1, std::uint64_t budget);

// Exact degeneracy of every (m10, m11) over all C(N, n1) subsets. The rank
// space of the revolving-door order is split into contiguous blocks; each
// worker walks its block with single-swap updates into a private tally.
// Throws Error(budget) carrying C(N, n1) when it exceeds the budget and
// Error(range) for n1 outside [0, N].
PhaseDiagram enumerate_phase_diagram(const Graph& g, std::int64_t n1,
                                     const EnumerationOptions& options = {});

// Serial reference: lexicographic subsets, dyads recounted from the edge list
// for every subset. Kept for testing and benchmarking the parallel kernel.
PhaseDiagram enumerate_phase_diagram_reference(const Graph& g, std::int64_t n1,
                                               std::uint64_t budget = default_enumeration_budget);

DyadExtrema extremal_dyads(const PhaseDiagram& diagram);
DyadExtrema extremal_dyads(const Graph& g, std::int64_t n1,
                           const EnumerationOptions& options = {});

} // namespace dyadic
