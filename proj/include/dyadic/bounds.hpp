#pragma once

#include <cstdint>
#include <string>

#include "dyadic/graph.hpp"
#include "dyadic/rational.hpp"

namespace dyadic {

// Bounds on the number of 1-1 and 1-0 dyads for a given number n1 of nodes
// carrying the characteristic. The *_old values are the purely combinatorial
// limits; the others use the degree sequence of the graph.
struct BoundsReport {
    std::int64_t n1 = 0;
    std::int64_t ub_m11_old = 0;
    std::int64_t ub_m10_old = 0;
    std::int64_t ub_m11 = 0;
    std::int64_t ub_m10 = 0;
    std::int64_t lb_m11 = 0;
    std::int64_t lb_m10 = 0;
    MaybeRational d_min, d_max, h_min, h_max;
    // Set when the input graph is not connected; lb_m10 then drops its floor of 1.
    bool disconnected = false;
};

// min(M, C(n1,2))
std::int64_t ub_m11_old(std::int64_t edge_count, std::int64_t n1);
// min(M, n1 n0)
std::int64_t ub_m10_old(std::int64_t edge_count, std::int64_t n1, std::int64_t n0);

// All graph-based bounds throw Error(range) unless 0 <= n1 <= N.

// min(M, C(n1,2), ceil(sum_{head(n1)} min(d_i, n1-1) / 2))
std::int64_t ub_m11(const Graph& g, std::int64_t n1);
// min(M, n1 n0, sum_{head(n1)} min(d_i, n0), sum_{head(n0)} min(d_i, n1))
std::int64_t ub_m10(const Graph& g, std::int64_t n1);
// max(0, floor((tail_sum(n1) - head_sum(n0)) / 2))
std::int64_t lb_m11(const Graph& g, std::int64_t n1);
// 0 at n1 in {0, N}; otherwise max(1, tail_sum(n1) - n1(n1-1)). The floor of
// 1 needs a connected graph; disconnected graphs use max(0, ...).
std::int64_t lb_m10(const Graph& g, std::int64_t n1);

BoundsReport bounds_report(const Graph& g, std::int64_t n1);

} // namespace dyadic
