#include <doctest.h>

#include <sstream>

#include "dyadic/error.hpp"
#include "dyadic/graph.hpp"
#include "fixtures.hpp"

using namespace dyadic;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected dyadic::Error");
    return ErrorKind::io;
}

} // namespace

TEST_CASE("parse_edge_list: path on three nodes")
{
    Graph g = parse_edge_list("0 1\n1 2");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree_sequence() == std::vector<std::int64_t>{2, 1, 1});
}

TEST_CASE("parse_edge_list: symbolic labels relabelled in first-appearance order")
{
    Graph g = parse_edge_list("a b\nb c\nc a");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree_sequence() == std::vector<std::int64_t>{2, 2, 2});
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");
}

TEST_CASE("parse_edge_list: comments and blank lines")
{
    Graph g = parse_edge_list("# header\n\n10 20  # trailing\n   \n20\t30\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "10");
}

TEST_CASE("parse_edge_list: errors")
{
    CHECK(kind_of([] { parse_edge_list("0 0"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_edge_list("0 1\n1 0"); }) == ErrorKind::validation);
    CHECK(kind_of([] { parse_edge_list("# nothing\n"); }) == ErrorKind::validation);

    try {
        parse_edge_list("0 1\n1 2 3\n");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(kind_of([] { parse_edge_list("0\n"); }) == ErrorKind::parse);
}

TEST_CASE("write_edge_list round trip")
{
    Graph g = parse_edge_list("x y\ny z\nz w\nw x\n");
    std::ostringstream os;
    write_edge_list(g, os);
    Graph h = parse_edge_list(os.str());
    CHECK(h.node_count() == g.node_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.degree_sequence() == g.degree_sequence());
}

TEST_CASE("head_sum / tail_sum on the star S4")
{
    Graph s4 = fixtures::star(4);
    CHECK(s4.degree_sequence() == std::vector<std::int64_t>{3, 1, 1, 1});
    CHECK(s4.head_sum(2) == 4);
    CHECK(s4.tail_sum(2) == 2);
    CHECK(s4.head_sum(0) == 0);
    CHECK(s4.tail_sum(0) == 0);
    CHECK(s4.head_sum(4) == 6);
    CHECK(s4.tail_sum(4) == 6);
    CHECK(kind_of([&] { s4.head_sum(5); }) == ErrorKind::range);
    CHECK(kind_of([&] { s4.tail_sum(5); }) == ErrorKind::range);

    auto head = s4.head(2);
    CHECK(head.kind == SubsequenceKind::head);
    CHECK(head.sum == 4);
    CHECK(head.values.size() == 2);
    auto tail = s4.tail(3);
    CHECK(tail.kind == SubsequenceKind::tail);
    CHECK(tail.sum == 3);
}

TEST_CASE("degree sequence ties ordered by node id")
{
    Graph g = fixtures::path(4);  // degrees 1,2,2,1
    CHECK(g.degree_order() == std::vector<NodeId>{1, 2, 0, 3});
}

TEST_CASE("is_connected")
{
    CHECK(is_connected(parse_edge_list("a b\nb c\nc a")));
    CHECK_FALSE(is_connected(parse_edge_list("0 1\n2 3")));
    CHECK(is_connected(Graph::from_edges(1, {})));
    CHECK_FALSE(Graph::from_edges(2, {}).is_connected());
}

TEST_CASE("graph invariants over the seeded corpus")
{
    for (const Graph& g : fixtures::small_corpus(60)) {
        const auto n = g.node_count();
        const auto m2 = 2 * static_cast<std::int64_t>(g.edge_count());
        std::int64_t sum = 0;
        for (NodeId v = 0; v < n; ++v)
            sum += g.degree(v);
        CHECK(sum == m2);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(g.head_sum(k) + g.tail_sum(n - k) == m2);
            CHECK(g.head_sum(k) >= g.tail_sum(k));
        }
        for (std::size_t i = 1; i < n; ++i)
            CHECK(g.degree_sequence()[i - 1] >= g.degree_sequence()[i]);
        for (auto [u, v] : g.edges()) {
            CHECK(u < v);
            CHECK(g.has_edge(v, u));
        }
    }
}
