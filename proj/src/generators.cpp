#include "dyadic/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dyadic/error.hpp"
#include "dyadic/random.hpp"

namespace dyadic {
namespace {

[[noreturn]] void config_error(const std::string& msg)
{
    throw Error(ErrorKind::config, msg);
}

// Round half up for nonnegative rationals.
std::int64_t round_nonneg(const Rational& x)
{
    if (x < 0)
        config_error("negative generator target");
    return (2 * x.numerator() + x.denominator()) / (2 * x.denominator());
}

Rational mean_degree_of(const GeneratorSpec& spec)
{
    const std::int64_t n = spec.node_count;
    return std::visit(
        [&](const auto& t) -> Rational {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, MeanDegree>)
                return t.value;
            else if constexpr (std::is_same_v<T, Density>)
                return t.value * Rational(n - 1);
            else
                return Rational(2 * t.value, n);
        },
        spec.target);
}

std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

// Index k in [0, N(N-1)/2) -> (u, v) with v < u, k = u(u-1)/2 + v.
Edge decode_pair(std::uint64_t k)
{
    auto u = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2.0);
    while (u * (u - 1) / 2 > k)
        --u;
    while ((u + 1) * u / 2 <= k)
        ++u;
    auto v = k - u * (u - 1) / 2;
    return {static_cast<NodeId>(v), static_cast<NodeId>(u)};
}

std::vector<Edge> erdos_renyi_edges(std::int64_t n, std::int64_t m, Rng& rng)
{
    // Floyd's sampling of m distinct pair indices.
    const auto pairs = static_cast<std::uint64_t>(pair_count(n));
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = pairs - static_cast<std::uint64_t>(m); j < pairs; ++j) {
        std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    edges.reserve(sorted.size());
    for (auto k : sorted)
        edges.push_back(decode_pair(k));
    return edges;
}

std::vector<Edge> barabasi_albert_edges(std::int64_t n, std::int64_t m, Rng& rng)
{
    std::vector<Edge> edges;
    std::vector<NodeId> endpoints;  // each node appears once per incident edge
    for (NodeId u = 0; u <= m; ++u)
        for (NodeId v = 0; v < u; ++v) {
            edges.emplace_back(v, u);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<NodeId> picked;
    for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
        picked.clear();
        while (static_cast<std::int64_t>(picked.size()) < m) {
            NodeId t = endpoints[rng.below(endpoints.size())];
            if (std::find(picked.begin(), picked.end(), t) == picked.end())
                picked.push_back(t);
        }
        for (NodeId t : picked) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return edges;
}

// Configuration-model pairing followed by degree-preserving swaps that remove
// loops and parallel edges. Returns false if repair does not converge.
bool regular_edges(std::int64_t n, std::int64_t d, Rng& rng, std::vector<Edge>& out)
{
    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<std::size_t>(n * d));
    for (NodeId v = 0; v < n; ++v)
        for (std::int64_t k = 0; k < d; ++k)
            stubs.push_back(v);
    rng.shuffle(std::span(stubs));

    auto key = [n](Edge e) {
        if (e.first > e.second)
            std::swap(e.first, e.second);
        return static_cast<std::uint64_t>(e.first) * static_cast<std::uint64_t>(n) + e.second;
    };
    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, int> multiplicity;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        edges.emplace_back(stubs[i], stubs[i + 1]);
        ++multiplicity[key(edges.back())];
    }
    auto defective = [&](const Edge& e) {
        return e.first == e.second || multiplicity[key(e)] > 1;
    };

    constexpr int max_passes = 200;
    constexpr int tries_per_defect = 200;
    for (int pass = 0; pass < max_passes; ++pass) {
        bool found = false;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (!defective(edges[i]))
                continue;
            found = true;
            for (int t = 0; t < tries_per_defect; ++t) {
                std::size_t j = rng.below(edges.size());
                if (j == i)
                    continue;
                auto [a, b] = edges[i];
                auto [c, e] = edges[j];
                Edge x{a, c}, y{b, e};
                if (rng.coin())
                    x = {a, e}, y = {b, c};
                if (x.first == x.second || y.first == y.second || key(x) == key(y))
                    continue;
                if (multiplicity[key(x)] > 0 || multiplicity[key(y)] > 0)
                    continue;
                --multiplicity[key(edges[i])];
                --multiplicity[key(edges[j])];
                ++multiplicity[key(x)];
                ++multiplicity[key(y)];
                edges[i] = x;
                edges[j] = y;
                break;
            }
        }
        if (!found) {
            out = std::move(edges);
            return true;
        }
    }
    return false;
}

std::vector<Edge> complement_edges(std::int64_t n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges)
        adj[u][v] = adj[v][u] = 1;
    std::vector<Edge> out;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (!adj[u][v])
                out.emplace_back(u, v);
    return out;
}

} // namespace

Family parse_family(std::string_view name)
{
    if (name == "er" || name == "erdos-renyi")
        return Family::erdos_renyi;
    if (name == "ba" || name == "barabasi-albert" || name == "scale-free")
        return Family::barabasi_albert;
    if (name == "regular")
        return Family::regular;
    config_error("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::erdos_renyi: return "er";
    case Family::barabasi_albert: return "ba";
    case Family::regular: return "regular";
    }
    return "?";
}

std::int64_t resolved_edge_count(const GeneratorSpec& spec)
{
    const std::int64_t n = spec.node_count;
    if (auto* e = std::get_if<EdgeCount>(&spec.target))
        return e->value;
    if (auto* d = std::get_if<Density>(&spec.target))
        return round_nonneg(d->value * Rational(pair_count(n)));
    return round_nonneg(std::get<MeanDegree>(spec.target).value * Rational(n, 2));
}

std::int64_t resolved_regular_degree(const GeneratorSpec& spec)
{
    const std::int64_t n = spec.node_count;
    Rational exact = mean_degree_of(spec);
    std::int64_t d = round_nonneg(exact);
    if (d > n - 1)
        return d;
    if ((n * d) % 2 != 0) {
        // n odd and d odd: move to the nearer even neighbour, ties downward.
        Rational down = exact - Rational(d - 1), up = Rational(d + 1) - exact;
        d = (up < down && d + 1 <= n - 1) ? d + 1 : d - 1;
    }
    return d;
}

std::int64_t resolved_attachment_count(const GeneratorSpec& spec)
{
    return round_nonneg(mean_degree_of(spec) / Rational(2));
}

Graph generate(const GeneratorSpec& spec)
{
    const std::int64_t n = spec.node_count;
    if (n < 1)
        config_error("node count must be at least 1");
    if (n > (1LL << 31))
        config_error("node count too large");
    if (auto* d = std::get_if<Density>(&spec.target); d && (d->value < 0 || d->value > 1))
        config_error("density must lie in [0, 1]");

    std::int64_t param = 0;
    switch (spec.family) {
    case Family::erdos_renyi:
        param = resolved_edge_count(spec);
        if (param < 0 || param > pair_count(n))
            config_error("edge count " + std::to_string(param) + " exceeds C(N,2)=" +
                         std::to_string(pair_count(n)));
        if (spec.require_connected && param < n - 1)
            config_error("connected graph needs at least N-1 edges");
        break;
    case Family::barabasi_albert:
        param = resolved_attachment_count(spec);
        if (param < 1 || param + 1 > n)
            config_error("preferential attachment needs 1 <= m < N (m=" +
                         std::to_string(param) + ")");
        break;
    case Family::regular:
        param = resolved_regular_degree(spec);
        if (param < 0 || param > n - 1)
            config_error("regular degree " + std::to_string(param) + " not in [0, N-1]");
        if ((n * param) % 2 != 0)
            config_error("regular graph needs N*d even");
        if (spec.require_connected && n > 1 && (param == 0 || (param == 1 && n > 2)))
            config_error("no connected " + std::to_string(param) + "-regular graph on " +
                         std::to_string(n) + " nodes");
        break;
    }

    const int attempts = std::max(1, spec.max_attempts);
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(splitmix64(splitmix64(spec.seed) ^ static_cast<std::uint64_t>(attempt)));
        std::vector<Edge> edges;
        switch (spec.family) {
        case Family::erdos_renyi:
            edges = erdos_renyi_edges(n, param, rng);
            break;
        case Family::barabasi_albert:
            edges = barabasi_albert_edges(n, param, rng);
            break;
        case Family::regular: {
            // Pair stubs on the sparser side; complement when dense.
            std::int64_t sparse_degree = std::min(param, n - 1 - param);
            if (!regular_edges(n, sparse_degree, rng, edges))
                continue;
            if (sparse_degree != param)
                edges = complement_edges(n, edges);
            break;
        }
        }
        Graph g = Graph::from_edges(static_cast<std::size_t>(n), std::move(edges));
        if (!spec.require_connected || g.is_connected())
            return g;
    }
    throw Error(ErrorKind::generation, "no valid graph after " + std::to_string(attempts) +
                                           " attempts (seed " + std::to_string(spec.seed) + ")");
}

GeneratorSpec parse_generator_config(std::string_view text)
{
    GeneratorSpec spec;
    bool has_target = false, has_n = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::parse, "config line " + std::to_string(line_no) +
                                              ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "family") {
                spec.family = parse_family(value);
            } else if (key == "n") {
                spec.node_count = std::stoll(value);
                has_n = true;
            } else if (key == "mean_degree") {
                spec.target = MeanDegree{parse_decimal(value)};
                has_target = true;
            } else if (key == "density") {
                spec.target = Density{parse_decimal(value)};
                has_target = true;
            } else if (key == "edges") {
                spec.target = EdgeCount{std::stoll(value)};
                has_target = true;
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else if (key == "connected") {
                spec.require_connected = value == "1" || value == "true" || value == "yes";
            } else {
                throw Error(ErrorKind::config, "unknown config key '" + key + "'");
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::parse, "config line " + std::to_string(line_no) +
                                              ": bad value '" + value + "'");
        }
    }
    if (!has_n || !has_target)
        config_error("generator config needs n and one of mean_degree, density, edges");
    return spec;
}

} // namespace dyadic
