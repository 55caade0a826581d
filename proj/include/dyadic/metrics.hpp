#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dyadic/graph.hpp"
#include "dyadic/rational.hpp"

namespace dyadic {

// Binary characteristic c_i over the nodes of a graph.
class CharacteristicAssignment {
public:
    explicit CharacteristicAssignment(std::vector<std::uint8_t> labels);
    // The given node ids carry label 1, all others 0.
    static CharacteristicAssignment from_set(std::size_t node_count,
                                             const std::vector<NodeId>& ones);

    const std::vector<std::uint8_t>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    std::size_t n1() const { return n1_; }
    std::size_t n0() const { return labels_.size() - n1_; }
    bool operator[](NodeId v) const { return labels_[v] != 0; }

    // Labels 0 <-> 1 swapped.
    CharacteristicAssignment complement() const;

private:
    std::vector<std::uint8_t> labels_;
    std::size_t n1_ = 0;
};

enum class LabelFormat {
    vector,  // one 0/1 per line, node order
    set,     // one node label per line, listing the 1-labelled nodes
};

// Node tokens in set files refer to the graph's original labels.
CharacteristicAssignment parse_characteristic(std::string_view text, LabelFormat format,
                                              const Graph& g);

struct DyadCounts {
    std::int64_t m11 = 0;
    std::int64_t m10 = 0;
    std::int64_t m00 = 0;

    std::int64_t total() const { return m11 + m10 + m00; }
    friend bool operator==(const DyadCounts&, const DyadCounts&) = default;
};

struct DyadStats {
    Rational density;
    Rational expected_m11;
    Rational expected_m10;
};

struct DyadicEffect {
    MaybeRational dyadicity;        // D = m11 / expected m11
    MaybeRational heterophilicity;  // H = m10 / expected m10
};

// Throws Error(validation) when the assignment length differs from N.
DyadCounts count_dyads(const Graph& g, const CharacteristicAssignment& a);

// delta = 2M / N(N-1); expected m11 = n1(n1-1)delta/2; expected m10 = n1(N-n1)delta.
// Throws Error(domain) for N < 2 and Error(range) for n1 > N.
DyadStats expected_dyads(std::int64_t node_count, std::int64_t edge_count, std::int64_t n1);
// Same expectations for a prescribed density.
DyadStats expected_dyads_for_density(std::int64_t node_count, const Rational& density,
                                     std::int64_t n1);

DyadicEffect dyadicity_heterophilicity(const DyadCounts& counts, const DyadStats& stats);

} // namespace dyadic
