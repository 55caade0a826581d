#include "dyadic/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "dyadic/error.hpp"

namespace dyadic {

Graph Graph::from_edges(std::size_t node_count, std::vector<Edge> edges,
                        std::vector<std::string> labels)
{
    if (node_count == 0)
        throw Error(ErrorKind::validation, "graph must have at least one node");
    if (!labels.empty() && labels.size() != node_count)
        throw Error(ErrorKind::validation, "label count does not match node count");

    Graph g;
    for (auto& [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw Error(ErrorKind::validation, "edge endpoint out of range");
        if (u == v)
            throw Error(ErrorKind::validation,
                        "self-loop at node " + std::to_string(u) + " (graph must be simple)");
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw Error(ErrorKind::validation, "duplicate edge " + std::to_string(dup->first) + "-" +
                                               std::to_string(dup->second) +
                                               " (graph must be simple)");
    g.edges_ = std::move(edges);

    g.adjacency_.assign(node_count, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());

    g.degree_order_.resize(node_count);
    std::iota(g.degree_order_.begin(), g.degree_order_.end(), NodeId{0});
    std::stable_sort(g.degree_order_.begin(), g.degree_order_.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    g.degree_sequence_.reserve(node_count);
    g.prefix_.assign(node_count + 1, 0);
    for (std::size_t i = 0; i < node_count; ++i) {
        g.degree_sequence_.push_back(g.degree(g.degree_order_[i]));
        g.prefix_[i + 1] = g.prefix_[i] + g.degree_sequence_[i];
    }

    if (labels.empty()) {
        labels.reserve(node_count);
        for (std::size_t i = 0; i < node_count; ++i)
            labels.push_back(std::to_string(i));
    }
    g.labels_ = std::move(labels);
    g.connected_ = dyadic::is_connected(g);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const
{
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::int64_t Graph::head_sum(std::size_t n) const
{
    if (n > node_count())
        throw Error(ErrorKind::range, "head length " + std::to_string(n) + " exceeds N=" +
                                          std::to_string(node_count()));
    return prefix_[n];
}

std::int64_t Graph::tail_sum(std::size_t n) const
{
    if (n > node_count())
        throw Error(ErrorKind::range, "tail length " + std::to_string(n) + " exceeds N=" +
                                          std::to_string(node_count()));
    return prefix_.back() - prefix_[node_count() - n];
}

DegreeSubsequence Graph::head(std::size_t n) const
{
    std::int64_t sum = head_sum(n);
    return {SubsequenceKind::head, std::span(degree_sequence_).first(n), sum};
}

DegreeSubsequence Graph::tail(std::size_t n) const
{
    std::int64_t sum = tail_sum(n);
    return {SubsequenceKind::tail, std::span(degree_sequence_).last(n), sum};
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.node_count();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

Graph parse_edge_list(std::string_view text)
{
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted)
            labels.push_back(token);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> fields;
        for (std::string tok; tokens >> tok;)
            fields.push_back(std::move(tok));
        if (fields.empty())
            continue;
        if (fields.size() != 2)
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) +
                                              ": expected two node tokens, found " +
                                              std::to_string(fields.size()));
        if (fields[0] == fields[1])
            throw Error(ErrorKind::validation, "line " + std::to_string(line_no) +
                                                   ": self-loop on '" + fields[0] +
                                                   "' (graph must be simple)");
        NodeId u = intern(fields[0]);
        NodeId v = intern(fields[1]);
        edges.emplace_back(u, v);
    }
    if (labels.empty())
        throw Error(ErrorKind::validation, "edge list contains no edges");
    const std::size_t n = labels.size();
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

Graph read_edge_list(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_edge_list(const Graph& g, std::ostream& out)
{
    out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << g.label(u) << ' ' << g.label(v) << '\n';
}

} // namespace dyadic
