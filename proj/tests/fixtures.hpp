#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/generators.hpp"
#include "dyadic/graph.hpp"

namespace fixtures {

using dyadic::Edge;
using dyadic::Graph;
using dyadic::NodeId;

inline Graph path(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

// Node 0 is the centre.
inline Graph star(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 1; i < n; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (NodeId i = 0; i < n; ++i)
        e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
    return Graph::from_edges(n, e);
}

// Seeded connected graphs, N in [4, 14], cycling through ER, BA and regular.
inline std::vector<Graph> small_corpus(int count)
{
    using namespace dyadic;
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        GeneratorSpec s;
        s.node_count = 4 + (i * 7) % 11;
        s.seed = 1000 + static_cast<std::uint64_t>(i);
        s.require_connected = true;
        const std::int64_t n = s.node_count;
        switch (i % 3) {
        case 0: {
            s.family = Family::erdos_renyi;
            std::int64_t pairs = n * (n - 1) / 2;
            std::int64_t m = (n - 1) + (i * 13) % (pairs - (n - 1) + 1);
            s.target = EdgeCount{m};
            break;
        }
        case 1:
            s.family = Family::barabasi_albert;
            s.target = MeanDegree{Rational(2 * (1 + (i / 3) % 3))};
            if (2 * (1 + (i / 3) % 3) >= 2 * n - 2)
                s.target = MeanDegree{Rational(2)};
            break;
        default: {
            s.family = Family::regular;
            std::int64_t d = 2 + (i / 3) % (n - 2);
            if ((n * d) % 2 != 0)
                --d;
            if (d < 2)
                d = 2;
            s.target = MeanDegree{Rational(d)};
            break;
        }
        }
        out.push_back(generate(s));
    }
    return out;
}

} // namespace fixtures
