#include "dyadic/phase_diagram.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <vector>

#include <omp.h>

#include "dyadic/bounds.hpp"
#include "dyadic/combinations.hpp"
#include "dyadic/error.hpp"

namespace dyadic {
namespace {

// Row-major adjacency bitmap, one row of `words` 64-bit words per node.
class AdjacencyBitmap {
public:
    explicit AdjacencyBitmap(const Graph& g)
        : words_((g.node_count() + 63) / 64), bits_(g.node_count() * words_, 0)
    {
        for (auto [u, v] : g.edges()) {
            bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }

    std::size_t words() const { return words_; }
    const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

// Per-worker histogram. Dense over the combinatorial rectangle
// [0, min(M, n1 n0)] x [0, min(M, C(n1,2))] when small, hashed otherwise.
class Tally {
public:
    static constexpr std::uint64_t dense_limit = std::uint64_t{1} << 20;

    Tally(std::int64_t max_m10, std::int64_t max_m11)
        : width_(max_m11 + 1)
    {
        auto cells = static_cast<std::uint64_t>(max_m10 + 1) * static_cast<std::uint64_t>(width_);
        if (cells <= dense_limit)
            dense_.assign(cells, 0);
    }

    void add(std::int64_t m10, std::int64_t m11)
    {
        auto key = static_cast<std::uint64_t>(m10) * static_cast<std::uint64_t>(width_) +
                   static_cast<std::uint64_t>(m11);
        if (!dense_.empty())
            ++dense_[key];
        else
            ++sparse_[key];
    }

    void merge_into(std::map<PhaseCell, std::uint64_t>& cells) const
    {
        auto put = [&](std::uint64_t key, std::uint64_t count) {
            auto m10 = static_cast<std::int64_t>(key / static_cast<std::uint64_t>(width_));
            auto m11 = static_cast<std::int64_t>(key % static_cast<std::uint64_t>(width_));
            cells[{m10, m11}] += count;
        };
        for (std::uint64_t key = 0; key < dense_.size(); ++key)
            if (dense_[key] != 0)
                put(key, dense_[key]);
        for (auto [key, count] : sparse_)
            put(key, count);
    }

private:
    std::int64_t width_;
    std::vector<std::uint64_t> dense_;
    std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

template <bool SingleWord>
void walk_block(const Graph& g, const AdjacencyBitmap& adj, const RevolvingDoor& order,
                std::uint64_t begin, std::uint64_t end, Tally& tally)
{
    const std::size_t words = adj.words();
    std::vector<std::uint64_t> member(words, 0);
    std::int64_t m11 = 0, degree_sum = 0;

    auto neighbours_inside = [&](std::uint32_t v) -> std::int64_t {
        const std::uint64_t* row = adj.row(v);
        if constexpr (SingleWord) {
            return std::popcount(row[0] & member[0]);
        } else {
            std::int64_t c = 0;
            for (std::size_t w = 0; w < words; ++w)
                c += std::popcount(row[w] & member[w]);
            return c;
        }
    };
    auto insert = [&](std::uint32_t v) {
        m11 += neighbours_inside(v);
        member[v / 64] |= std::uint64_t{1} << (v % 64);
        degree_sum += g.degree(v);
    };
    auto erase = [&](std::uint32_t v) {
        member[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        m11 -= neighbours_inside(v);
        degree_sum -= g.degree(v);
    };

    auto cursor = order.cursor_at(begin);
    for (std::uint32_t v : cursor.elements())
        insert(v);
    tally.add(degree_sum - 2 * m11, m11);
    for (std::uint64_t r = begin + 1; r < end; ++r) {
        auto [out, in] = cursor.next();
        erase(out);
        insert(in);
        tally.add(degree_sum - 2 * m11, m11);
    }
}

} // namespace

std::uint64_t checked_subset_count(const Graph& g, std::int64_t n1, std::uint64_t budget)
{
    const auto n = static_cast<std::int64_t>(g.node_count());
    if (n1 < 0 || n1 > n)
        throw Error(ErrorKind::range, "n1=" + std::to_string(n1) + " outside [0, " +
                                          std::to_string(n) + "]");
    std::uint64_t total = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n1));
    if (total > budget) {
        std::string count = total == binomial_saturated ? std::string(">= 2^64")
                                                        : std::to_string(total);
        throw Error(ErrorKind::budget, "C(" + std::to_string(n) + "," + std::to_string(n1) +
                                           ")=" + count + " subsets exceeds the enumeration budget of " +
                                           std::to_string(budget));
    }
    return total;
}

PhaseDiagram enumerate_phase_diagram(const Graph& g, std::int64_t n1,
                                     const EnumerationOptions& options)
{
    const std::uint64_t total = checked_subset_count(g, n1, options.budget);
    const auto n = static_cast<std::int64_t>(g.node_count());
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const RevolvingDoor order(static_cast<std::size_t>(n), static_cast<std::size_t>(n1));
    const AdjacencyBitmap adj(g);

    const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
    const std::int64_t max_m10 = ub_m10_old(m, n1, n - n1);
    const std::int64_t max_m11 = ub_m11_old(m, n1);
    std::vector<Tally> tallies(static_cast<std::size_t>(workers), Tally(max_m10, max_m11));

    const std::uint64_t blocks = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(workers) * 16);
    auto block_start = [&](std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * b / blocks);
    };

#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        Tally& tally = tallies[static_cast<std::size_t>(omp_get_thread_num())];
        auto ub = static_cast<std::uint64_t>(b);
        if (adj.words() == 1)
            walk_block<true>(g, adj, order, block_start(ub), block_start(ub + 1), tally);
        else
            walk_block<false>(g, adj, order, block_start(ub), block_start(ub + 1), tally);
    }

    PhaseDiagram d;
    d.n1 = n1;
    d.total = total;
    for (const auto& t : tallies)
        t.merge_into(d.cells);
    return d;
}

DyadExtrema extremal_dyads(const PhaseDiagram& diagram)
{
    DyadExtrema e;
    bool first = true;
    for (const auto& [cell, count] : diagram.cells) {
        auto [m10, m11] = cell;
        if (first) {
            e = {m11, m11, m10, m10};
            first = false;
            continue;
        }
        e.min_m11 = std::min(e.min_m11, m11);
        e.max_m11 = std::max(e.max_m11, m11);
        e.min_m10 = std::min(e.min_m10, m10);
        e.max_m10 = std::max(e.max_m10, m10);
    }
    return e;
}

DyadExtrema extremal_dyads(const Graph& g, std::int64_t n1, const EnumerationOptions& options)
{
    return extremal_dyads(enumerate_phase_diagram(g, n1, options));
}

} // namespace dyadic
