#include "dyadic/gains.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include <omp.h>

#include "dyadic/error.hpp"

namespace dyadic {

std::int64_t lattice_area(std::int64_t lb_m10, std::int64_t ub_m10, std::int64_t lb_m11,
                          std::int64_t ub_m11)
{
    std::int64_t w = std::max<std::int64_t>(0, ub_m10 - lb_m10 + 1);
    std::int64_t h = std::max<std::int64_t>(0, ub_m11 - lb_m11 + 1);
    return w * h;
}

std::int64_t feasible_area(const BoundsReport& r)
{
    return lattice_area(r.lb_m10, r.ub_m10, r.lb_m11, r.ub_m11);
}

std::int64_t feasible_area_old(const BoundsReport& r)
{
    return lattice_area(0, r.ub_m10_old, 0, r.ub_m11_old);
}

GainRow gain_row(const BoundsReport& r)
{
    const std::int64_t old_area = feasible_area_old(r);
    auto gain = [&](std::int64_t area) {
        return old_area == 0 ? 0.0
                             : 1.0 - static_cast<double>(area) / static_cast<double>(old_area);
    };

    GainRow row;
    row.n1 = r.n1;
    row.area_old = static_cast<double>(old_area);
    row.area_new = static_cast<double>(feasible_area(r));
    row.gain_ub_m11 = gain(lattice_area(0, r.ub_m10_old, 0, r.ub_m11));
    row.gain_ub_m10 = gain(lattice_area(0, r.ub_m10, 0, r.ub_m11_old));
    row.gain_lb_m11 = gain(lattice_area(0, r.ub_m10_old, r.lb_m11, r.ub_m11_old));
    row.gain_lb_m10 = gain(lattice_area(r.lb_m10, r.ub_m10_old, 0, r.ub_m11_old));
    row.gain_total = gain(feasible_area(r));
    return row;
}

std::vector<GainRow> gain_curves(const Graph& g)
{
    std::vector<GainRow> rows;
    const auto n = static_cast<std::int64_t>(g.node_count());
    rows.reserve(static_cast<std::size_t>(n + 1));
    for (std::int64_t n1 = 0; n1 <= n; ++n1)
        rows.push_back(gain_row(bounds_report(g, n1)));
    return rows;
}

std::vector<GainRow> ensemble_gain(const GeneratorSpec& spec, int runs, int workers)
{
    if (runs < 1)
        throw Error(ErrorKind::config, "ensemble needs at least one run");
    if (spec.family == Family::barabasi_albert && std::holds_alternative<Density>(spec.target))
        throw Error(ErrorKind::config,
                    "scale-free ensembles with a density target are not supported "
                    "(dense scale-free graphs are unrealizable)");

    std::vector<std::vector<GainRow>> per_run(static_cast<std::size_t>(runs));
    std::vector<std::optional<Error>> failures(static_cast<std::size_t>(runs));
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (int i = 0; i < runs; ++i) {
        GeneratorSpec s = spec;
        s.seed = spec.seed + static_cast<std::uint64_t>(i);
        try {
            per_run[static_cast<std::size_t>(i)] = gain_curves(generate(s));
        } catch (const Error& e) {
            failures[static_cast<std::size_t>(i)] =
                Error(e.kind(), "seed " + std::to_string(s.seed) + ": " + e.what());
        }
    }
    for (auto& f : failures)
        if (f)
            throw *f;

    std::vector<GainRow> mean = per_run.front();
    for (std::size_t i = 1; i < per_run.size(); ++i) {
        for (std::size_t r = 0; r < mean.size(); ++r) {
            const GainRow& x = per_run[i][r];
            GainRow& acc = mean[r];
            acc.area_old += x.area_old;
            acc.area_new += x.area_new;
            acc.gain_ub_m11 += x.gain_ub_m11;
            acc.gain_ub_m10 += x.gain_ub_m10;
            acc.gain_lb_m11 += x.gain_lb_m11;
            acc.gain_lb_m10 += x.gain_lb_m10;
            acc.gain_total += x.gain_total;
        }
    }
    const double k = runs;
    for (auto& acc : mean) {
        acc.area_old /= k;
        acc.area_new /= k;
        acc.gain_ub_m11 /= k;
        acc.gain_ub_m10 /= k;
        acc.gain_lb_m11 /= k;
        acc.gain_lb_m10 /= k;
        acc.gain_total /= k;
    }
    return mean;
}

} // namespace dyadic
