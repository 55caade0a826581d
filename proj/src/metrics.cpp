#include "dyadic/metrics.hpp"

#include <sstream>
#include <unordered_map>

#include "dyadic/error.hpp"

namespace dyadic {

CharacteristicAssignment::CharacteristicAssignment(std::vector<std::uint8_t> labels)
    : labels_(std::move(labels))
{
    for (auto& c : labels_) {
        if (c > 1)
            throw Error(ErrorKind::validation, "characteristic values must be 0 or 1");
        n1_ += c;
    }
}

CharacteristicAssignment CharacteristicAssignment::from_set(std::size_t node_count,
                                                            const std::vector<NodeId>& ones)
{
    std::vector<std::uint8_t> labels(node_count, 0);
    for (NodeId v : ones) {
        if (v >= node_count)
            throw Error(ErrorKind::validation, "node id " + std::to_string(v) + " out of range");
        labels[v] = 1;
    }
    return CharacteristicAssignment(std::move(labels));
}

CharacteristicAssignment CharacteristicAssignment::complement() const
{
    std::vector<std::uint8_t> flipped(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i)
        flipped[i] = labels_[i] ? 0 : 1;
    return CharacteristicAssignment(std::move(flipped));
}

CharacteristicAssignment parse_characteristic(std::string_view text, LabelFormat format,
                                              const Graph& g)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> tokens;
    std::vector<int> line_of;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string tok, extra;
        if (!(fields >> tok))
            continue;
        if (fields >> extra)
            throw Error(ErrorKind::parse, "characteristic line " + std::to_string(line_no) +
                                              ": expected a single token");
        tokens.push_back(tok);
        line_of.push_back(line_no);
    }

    if (format == LabelFormat::vector) {
        if (tokens.size() != g.node_count())
            throw Error(ErrorKind::validation,
                        "characteristic vector has " + std::to_string(tokens.size()) +
                            " entries, graph has " + std::to_string(g.node_count()) + " nodes");
        std::vector<std::uint8_t> labels;
        labels.reserve(tokens.size());
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i] != "0" && tokens[i] != "1")
                throw Error(ErrorKind::parse, "characteristic line " +
                                                  std::to_string(line_of[i]) + ": expected 0 or 1");
            labels.push_back(tokens[i] == "1" ? 1 : 0);
        }
        return CharacteristicAssignment(std::move(labels));
    }

    std::unordered_map<std::string, NodeId> ids;
    for (NodeId v = 0; v < g.node_count(); ++v)
        ids.emplace(g.label(v), v);
    std::vector<std::uint8_t> labels(g.node_count(), 0);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto it = ids.find(tokens[i]);
        if (it == ids.end())
            throw Error(ErrorKind::validation, "characteristic line " +
                                                   std::to_string(line_of[i]) + ": unknown node '" +
                                                   tokens[i] + "'");
        labels[it->second] = 1;
    }
    return CharacteristicAssignment(std::move(labels));
}

DyadCounts count_dyads(const Graph& g, const CharacteristicAssignment& a)
{
    if (a.size() != g.node_count())
        throw Error(ErrorKind::validation, "assignment length " + std::to_string(a.size()) +
                                               " does not match N=" +
                                               std::to_string(g.node_count()));
    DyadCounts c;
    for (auto [u, v] : g.edges()) {
        int ones = a[u] + a[v];
        if (ones == 2)
            ++c.m11;
        else if (ones == 1)
            ++c.m10;
        else
            ++c.m00;
    }
    return c;
}

DyadStats expected_dyads_for_density(std::int64_t node_count, const Rational& density,
                                     std::int64_t n1)
{
    if (node_count < 2)
        throw Error(ErrorKind::domain, "density undefined for N < 2");
    if (n1 < 0 || n1 > node_count)
        throw Error(ErrorKind::range, "n1 must lie in [0, N]");
    DyadStats s;
    s.density = density;
    s.expected_m11 = Rational(n1 * (n1 - 1), 2) * density;
    s.expected_m10 = Rational(n1 * (node_count - n1)) * density;
    return s;
}

DyadStats expected_dyads(std::int64_t node_count, std::int64_t edge_count, std::int64_t n1)
{
    if (node_count < 2)
        throw Error(ErrorKind::domain, "density undefined for N < 2");
    return expected_dyads_for_density(
        node_count, Rational(2 * edge_count, node_count * (node_count - 1)), n1);
}

DyadicEffect dyadicity_heterophilicity(const DyadCounts& counts, const DyadStats& stats)
{
    DyadicEffect e;
    if (stats.expected_m11 > 0)
        e.dyadicity = Rational(counts.m11) / stats.expected_m11;
    if (stats.expected_m10 > 0)
        e.heterophilicity = Rational(counts.m10) / stats.expected_m10;
    return e;
}

} // namespace dyadic
