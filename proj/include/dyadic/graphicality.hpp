#pragma once

#include <cstdint>
#include <span>

namespace dyadic {

// Erdős–Gallai test: true iff the sequence (any order, nonnegative entries)
// is the degree sequence of some simple graph. Negative entries yield false.
bool erdos_gallai_graphic(std::span<const std::int64_t> sequence);

} // namespace dyadic
