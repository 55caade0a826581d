#include "dyadic/bounds.hpp"

#include <algorithm>

#include "dyadic/error.hpp"
#include "dyadic/metrics.hpp"

namespace dyadic {
namespace {

void check_n1(const Graph& g, std::int64_t n1)
{
    if (n1 < 0 || n1 > static_cast<std::int64_t>(g.node_count()))
        throw Error(ErrorKind::range, "n1=" + std::to_string(n1) + " outside [0, " +
                                          std::to_string(g.node_count()) + "]");
}

// sum over the first `count` degrees of min(d_i, cap)
std::int64_t capped_head_sum(const Graph& g, std::int64_t count, std::int64_t cap)
{
    std::int64_t sum = 0;
    for (std::int64_t d : g.head(static_cast<std::size_t>(count)).values)
        sum += std::min(d, cap);
    return sum;
}

std::int64_t floor_div2(std::int64_t x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

} // namespace

std::int64_t ub_m11_old(std::int64_t edge_count, std::int64_t n1)
{
    return std::min(edge_count, n1 * (n1 - 1) / 2);
}

std::int64_t ub_m10_old(std::int64_t edge_count, std::int64_t n1, std::int64_t n0)
{
    return std::min(edge_count, n1 * n0);
}

std::int64_t ub_m11(const Graph& g, std::int64_t n1)
{
    check_n1(g, n1);
    const auto m = static_cast<std::int64_t>(g.edge_count());
    if (n1 == 0)
        return 0;
    std::int64_t stubs = capped_head_sum(g, n1, n1 - 1);
    return std::min({m, n1 * (n1 - 1) / 2, (stubs + 1) / 2});
}

std::int64_t ub_m10(const Graph& g, std::int64_t n1)
{
    check_n1(g, n1);
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t n0 = static_cast<std::int64_t>(g.node_count()) - n1;
    std::int64_t ones_side = capped_head_sum(g, n1, n0);
    std::int64_t zeros_side = capped_head_sum(g, n0, n1);
    return std::min({m, n1 * n0, ones_side, zeros_side});
}

std::int64_t lb_m11(const Graph& g, std::int64_t n1)
{
    check_n1(g, n1);
    const std::int64_t n0 = static_cast<std::int64_t>(g.node_count()) - n1;
    std::int64_t excess = g.tail_sum(static_cast<std::size_t>(n1)) -
                          g.head_sum(static_cast<std::size_t>(n0));
    return std::max<std::int64_t>(0, floor_div2(excess));
}

std::int64_t lb_m10(const Graph& g, std::int64_t n1)
{
    check_n1(g, n1);
    const auto n = static_cast<std::int64_t>(g.node_count());
    if (n1 == 0 || n1 == n)
        return 0;
    std::int64_t residual = g.tail_sum(static_cast<std::size_t>(n1)) - n1 * (n1 - 1);
    std::int64_t floor = g.is_connected() ? 1 : 0;
    return std::max(floor, residual);
}

BoundsReport bounds_report(const Graph& g, std::int64_t n1)
{
    check_n1(g, n1);
    const auto n = static_cast<std::int64_t>(g.node_count());
    const auto m = static_cast<std::int64_t>(g.edge_count());

    BoundsReport r;
    r.n1 = n1;
    r.ub_m11_old = ub_m11_old(m, n1);
    r.ub_m10_old = ub_m10_old(m, n1, n - n1);
    r.ub_m11 = ub_m11(g, n1);
    r.ub_m10 = ub_m10(g, n1);
    r.lb_m11 = lb_m11(g, n1);
    r.lb_m10 = lb_m10(g, n1);
    r.disconnected = !g.is_connected();

    if (n >= 2) {
        DyadStats stats = expected_dyads(n, m, n1);
        if (stats.expected_m11 > 0) {
            r.d_min = Rational(r.lb_m11) / stats.expected_m11;
            r.d_max = Rational(r.ub_m11) / stats.expected_m11;
        }
        if (stats.expected_m10 > 0) {
            r.h_min = Rational(r.lb_m10) / stats.expected_m10;
            r.h_max = Rational(r.ub_m10) / stats.expected_m10;
        }
    }
    return r;
}

} // namespace dyadic
