#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dyadic {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

enum class SubsequenceKind { head, tail };

// A contiguous slice of the non-increasing degree sequence.
struct DegreeSubsequence {
    SubsequenceKind kind;
    std::span<const std::int64_t> values;
    std::int64_t sum;

    std::size_t size() const { return values.size(); }
};

// Immutable simple undirected graph. Nodes are dense ids 0..N-1; the original
// labels (from an edge-list file) are kept alongside for output.
class Graph {
public:
    // Throws Error(validation) on self-loops, duplicate edges, out-of-range
    // endpoints or node_count == 0. Edge orientation is irrelevant.
    static Graph from_edges(std::size_t node_count, std::vector<Edge> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    // Edges with first < second, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted neighbour list of one node.
    const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }
    std::int64_t degree(NodeId v) const { return static_cast<std::int64_t>(adjacency_[v].size()); }
    bool has_edge(NodeId u, NodeId v) const;

    // Degrees sorted non-increasing; equal degrees ordered by node id.
    const std::vector<std::int64_t>& degree_sequence() const { return degree_sequence_; }
    // Node ids in degree-sequence order.
    const std::vector<NodeId>& degree_order() const { return degree_order_; }

    DegreeSubsequence head(std::size_t n) const;
    DegreeSubsequence tail(std::size_t n) const;
    // Sum of the first / last n entries of the degree sequence. n > N throws Error(range).
    std::int64_t head_sum(std::size_t n) const;
    std::int64_t tail_sum(std::size_t n) const;

    bool is_connected() const { return connected_; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    Graph() = default;

    std::vector<Edge> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<std::int64_t> degree_sequence_;
    std::vector<NodeId> degree_order_;
    std::vector<std::int64_t> prefix_;  // prefix_[k] = head_sum(k)
    std::vector<std::string> labels_;
    bool connected_ = false;
};

// Breadth-first reachability from node 0.
bool is_connected(const Graph& g);

// Edge-list text: one edge per line, two whitespace separated tokens, '#'
// starts a comment, blank lines ignored. Nodes relabelled in first-appearance
// order. Malformed lines throw Error(parse) naming the line number; loops and
// duplicate edges throw Error(validation).
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::string& path);

// Writes edges using the original labels, preceded by a comment line with N and M.
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace dyadic
