#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/bounds.hpp"
#include "dyadic/generators.hpp"
#include "dyadic/graph.hpp"

namespace dyadic {

// Lattice-cell count of [lb_m10, ub_m10] x [lb_m11, ub_m11]; 0 if a range is empty.
std::int64_t lattice_area(std::int64_t lb_m10, std::int64_t ub_m10, std::int64_t lb_m11,
                          std::int64_t ub_m11);

// Area of the region bounded by the four new bounds.
std::int64_t feasible_area(const BoundsReport& report);
// Area of [0, ub_m10_old] x [0, ub_m11_old].
std::int64_t feasible_area_old(const BoundsReport& report);

// Gain of one bound = 1 - area(old rectangle with only that bound
// substituted) / area(old rectangle). gain_total substitutes all four.
struct GainRow {
    std::int64_t n1 = 0;
    double area_old = 0;
    double area_new = 0;
    double gain_ub_m11 = 0;
    double gain_ub_m10 = 0;
    double gain_lb_m11 = 0;
    double gain_lb_m10 = 0;
    double gain_total = 0;

    friend bool operator==(const GainRow&, const GainRow&) = default;
};

GainRow gain_row(const BoundsReport& report);

// One row per n1 in [0, N].
std::vector<GainRow> gain_curves(const Graph& g);

// Element-wise mean of gain_curves over `runs` instances generated with seeds
// spec.seed, spec.seed+1, ... Instances are built in parallel; the mean is
// accumulated in seed order. Throws Error(config) for a preferential-attachment
// spec with a density target, and rethrows generation failures naming the seed.
std::vector<GainRow> ensemble_gain(const GeneratorSpec& spec, int runs, int workers = 0);

} // namespace dyadic
